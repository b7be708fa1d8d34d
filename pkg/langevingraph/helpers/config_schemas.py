"""
Schemas of the experiment configuration files.

A config is a JSON object with a top-level ``experiment`` discriminator,
``seed``, ``output_dir``, ``verbose`` and at most one parameter block named
after the experiment. Physical parameters are checked when the file is
loaded, and every failure becomes a :class:`ConfigError` naming the key path.
"""

import contextlib
import json
from typing import Annotated, Any, Dict, Iterator, List, Literal, Optional, Tuple

import numpy as np
import pydantic
from pydantic import (
    AfterValidator,
    BaseModel,
    ConfigDict,
    Field,
    field_validator,
    model_validator,
)

from ..integrators.baoab import Regime
from ..models.potentials import DoubleWell, LennardJones, Quadratic
from ..models.system import TwoTemperatureSystem, fdr_noise
from ..spectral.linear_model import LinearTemplate
from ..utils.errors import ConfigError, LangevinGraphError
from ..utils.linalg import check_spd, is_skew_symmetric
from .experiment_defaults import experiment_defaults

Matrix = List[List[float]]

EXPERIMENTS = ("ou_kl", "ratio", "bistable", "lj_cool", "limits", "aep")


@contextlib.contextmanager
def translate_errors(key_path: str) -> Iterator[None]:
    """
    Re-raise library and pydantic errors as :class:`ConfigError` at ``key_path``.
    """
    try:
        yield
    except ConfigError:
        raise
    except pydantic.ValidationError as e:
        raise config_error_from_pydantic(e, prefix=key_path) from e
    except LangevinGraphError as e:
        raise ConfigError(str(e), key_path) from e


def config_error_from_pydantic(
    error: pydantic.ValidationError, prefix: str = ""
) -> ConfigError:
    problems = []
    first_path = prefix
    for item in error.errors():
        path = ".".join(str(p) for p in item["loc"])
        if prefix:
            path = f"{prefix}.{path}" if path else prefix
        first_path = first_path or path
        problems.append(f"{path}: {item['msg']}" if path else item["msg"])
    err = ConfigError("; ".join(problems))
    err.key_path = first_path or None
    return err


def _value_error(check, *args):
    # pydantic reports ValueErrors with their location; arithmetic ones escape it
    try:
        return check(*args)
    except LangevinGraphError as e:
        raise ValueError(str(e)) from e


def _spd_matrix(value):
    _value_error(check_spd, value, "matrix")
    return value


SpdMatrix = Annotated[Matrix, AfterValidator(_spd_matrix)]


def _defaults(name: str) -> Dict[str, Any]:
    return experiment_defaults[name]


class _Block(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class OuKlParams(_Block):
    """
    Linear model and KL tracking for a list of temperature ratios.

    The initial law is Gaussian with covariance ``sigma0_scale * I`` and, by
    default, its mean displaced by ``mean_offset`` along the first position.
    Setting ``mean_offset`` to zero gives the centred variant.
    """

    k_mat: SpdMatrix = _defaults("ou_kl")["k_mat"]
    gamma: SpdMatrix = _defaults("ou_kl")["gamma"]
    beta: float = Field(default=_defaults("ou_kl")["beta"], gt=0.0)
    sigma0_scale: float = Field(default=_defaults("ou_kl")["sigma0_scale"], gt=0.0)
    mean0: Optional[List[float]] = _defaults("ou_kl")["mean0"]
    mean_offset: float = _defaults("ou_kl")["mean_offset"]
    alphas: List[float] = Field(default=_defaults("ou_kl")["alphas"], min_length=1)
    t_max: float = Field(default=_defaults("ou_kl")["t_max"], gt=0.0)
    n_times: int = Field(default=_defaults("ou_kl")["n_times"], ge=2)
    fit_window: Tuple[float, float] = tuple(_defaults("ou_kl")["fit_window"])
    kl_floor: float = Field(default=_defaults("ou_kl")["kl_floor"], gt=0.0)

    @field_validator("alphas")
    @classmethod
    def _positive(cls, value):
        if any(a <= 0.0 for a in value):
            raise ValueError("every alpha must be positive")
        return value

    @model_validator(mode="after")
    def _consistent(self):
        n = len(self.k_mat)
        if len(self.gamma) != n:
            raise ValueError(f"k_mat is {n}x{n} but gamma is {len(self.gamma)}x{len(self.gamma)}")
        if self.mean0 is not None and len(self.mean0) != 2 * n:
            raise ValueError(f"mean0 must have length {2 * n}")
        if self.fit_window[0] >= self.fit_window[1]:
            raise ValueError("fit_window must be an increasing pair")
        return self

    def template(self) -> LinearTemplate:
        return LinearTemplate(k_mat=self.k_mat, gamma=self.gamma, beta=self.beta)

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.n_times)

    def sigma0(self) -> np.ndarray:
        return self.sigma0_scale * np.eye(2 * len(self.k_mat))

    def initial_mean(self) -> Optional[np.ndarray]:
        """
        ``mean0`` when given, else ``mean_offset`` on the first position;
        None for a centred initial law.
        """
        if self.mean0 is not None:
            mean = np.asarray(self.mean0, dtype=float)
        else:
            mean = np.zeros(2 * len(self.k_mat))
            mean[0] = self.mean_offset
        return mean if np.any(mean) else None


class RatioParams(_Block):
    """
    Linear model whose optimal temperature ratio is searched.
    """

    k_mat: SpdMatrix = _defaults("ratio")["k_mat"]
    gamma: SpdMatrix = _defaults("ratio")["gamma"]
    beta: float = Field(default=_defaults("ratio")["beta"], gt=0.0)
    alpha_min: float = Field(default=_defaults("ratio")["alpha_min"], gt=0.0)
    alpha_max: float = Field(default=_defaults("ratio")["alpha_max"], gt=0.0)
    n_grid: int = Field(default=_defaults("ratio")["n_grid"], ge=2)
    tol: float = Field(default=_defaults("ratio")["tol"], gt=0.0)

    @model_validator(mode="after")
    def _consistent(self):
        if len(self.k_mat) != len(self.gamma):
            raise ValueError("k_mat and gamma differ in size")
        if self.alpha_min >= self.alpha_max:
            raise ValueError("alpha_min must be below alpha_max")
        return self

    def template(self) -> LinearTemplate:
        return LinearTemplate(k_mat=self.k_mat, gamma=self.gamma, beta=self.beta)


class BistableParams(_Block):
    """
    Coupled double well with tridiagonal friction.

    ``clock="rescaled"`` runs the controlled system in the time variable
    ``t / eps`` with ``eps = beta_bar / beta``, so a step of size ``dt``
    covers ``dt / eps`` of physical time; ``"physical"`` integrates both runs
    in the same time variable.
    """

    d: int = Field(default=_defaults("bistable")["d"], ge=0)
    k: float = Field(default=_defaults("bistable")["k"], gt=0.0)
    gamma_diag: float = Field(default=_defaults("bistable")["gamma_diag"], gt=0.0)
    gamma_offdiag: float = _defaults("bistable")["gamma_offdiag"]
    beta_bar: float = Field(default=_defaults("bistable")["beta_bar"], gt=0.0)
    beta: float = Field(default=_defaults("bistable")["beta"], gt=0.0)
    dt: float = Field(default=_defaults("bistable")["dt"], gt=0.0)
    n_steps: int = Field(default=_defaults("bistable")["n_steps"], ge=0)
    thin: int = Field(default=_defaults("bistable")["thin"], ge=1)
    n_seeds: int = Field(default=_defaults("bistable")["n_seeds"], ge=1)
    clock: Literal["rescaled", "physical"] = _defaults("bistable")["clock"]
    init_q: float = _defaults("bistable")["init_q"]
    band: float = Field(default=_defaults("bistable")["band"], gt=0.0)
    bins: int = Field(default=_defaults("bistable")["bins"], ge=1)
    hist_range: Tuple[float, float] = tuple(_defaults("bistable")["hist_range"])
    max_lag: int = Field(default=_defaults("bistable")["max_lag"], ge=0)

    @model_validator(mode="after")
    def _friction(self):
        _value_error(check_spd, self.gamma(), "gamma")
        if self.hist_range[0] >= self.hist_range[1]:
            raise ValueError("hist_range must be an increasing pair")
        if self.clock == "rescaled" and self.beta_bar > self.beta:
            raise ValueError("the rescaled clock needs beta_bar <= beta")
        return self

    def gamma(self) -> np.ndarray:
        n = self.d + 1
        off = np.full(n - 1, self.gamma_offdiag)
        return np.diag(np.full(n, self.gamma_diag)) + np.diag(off, 1) + np.diag(off, -1)

    def potential(self) -> DoubleWell:
        return DoubleWell(d=self.d, k=self.k)

    def systems(self) -> Dict[str, TwoTemperatureSystem]:
        """
        Controlled (``beta_bar``, ``beta``) and uncontrolled (``beta``, ``beta``) systems.
        """
        gamma = self.gamma()
        return {
            "controlled": TwoTemperatureSystem.from_friction(gamma, self.beta_bar, self.beta),
            "uncontrolled": TwoTemperatureSystem.from_friction(gamma, self.beta, self.beta),
        }


class LjCoolParams(_Block):
    """
    Lennard-Jones cooling runs at a fixed simulation temperature.
    """

    n_particles: int = Field(default=_defaults("lj_cool")["n_particles"], ge=2)
    dim: Literal[1, 2, 3] = _defaults("lj_cool")["dim"]
    eps: float = Field(default=_defaults("lj_cool")["eps"], gt=0.0)
    sig: float = Field(default=_defaults("lj_cool")["sig"], gt=0.0)
    container_radius: Optional[float] = Field(
        default=_defaults("lj_cool")["container_radius"], gt=0.0
    )
    container_stiffness: float = Field(
        default=_defaults("lj_cool")["container_stiffness"], gt=0.0
    )
    gamma: float = Field(default=_defaults("lj_cool")["gamma"], gt=0.0)
    beta_bar: float = Field(default=_defaults("lj_cool")["beta_bar"], gt=0.0)
    betas: List[float] = Field(default=_defaults("lj_cool")["betas"], min_length=1)
    dt: float = Field(default=_defaults("lj_cool")["dt"], gt=0.0)
    n_steps: int = Field(default=_defaults("lj_cool")["n_steps"], ge=0)
    thin: int = Field(default=_defaults("lj_cool")["thin"], ge=1)
    spacing: Optional[float] = Field(default=_defaults("lj_cool")["spacing"], gt=0.0)
    jitter: float = Field(default=_defaults("lj_cool")["jitter"], ge=0.0)
    oracle_starts: int = Field(default=_defaults("lj_cool")["oracle_starts"], ge=0)
    oracle_dt: float = Field(default=_defaults("lj_cool")["oracle_dt"], gt=0.0)
    oracle_steps: int = Field(default=_defaults("lj_cool")["oracle_steps"], ge=0)

    @field_validator("betas")
    @classmethod
    def _positive(cls, value):
        if any(b <= 0.0 for b in value):
            raise ValueError("every beta must be positive")
        return value

    def potential(self) -> LennardJones:
        return LennardJones(
            n_particles=self.n_particles,
            dim=self.dim,
            eps=self.eps,
            sig=self.sig,
            container_radius=self.container_radius,
            container_stiffness=self.container_stiffness,
        )

    def friction(self) -> np.ndarray:
        return self.gamma * np.eye(self.n_particles * self.dim)

    def system(self, beta: float) -> TwoTemperatureSystem:
        return TwoTemperatureSystem.from_friction(self.friction(), self.beta_bar, beta)


class LimitsParams(_Block):
    """
    Large temperature-separation limits on a quadratic potential.
    """

    regime: Regime = _defaults("limits")["regime"]
    k_mat: SpdMatrix = _defaults("limits")["k_mat"]
    gamma: SpdMatrix = _defaults("limits")["gamma"]
    beta_bar: float = Field(default=_defaults("limits")["beta_bar"], gt=0.0)
    beta: float = Field(default=_defaults("limits")["beta"], gt=0.0)
    x0: List[float] = _defaults("limits")["x0"]
    eps: List[float] = Field(default=_defaults("limits")["eps"], min_length=1)
    horizon: float = Field(default=_defaults("limits")["horizon"], gt=0.0)
    replicas: int = Field(default=_defaults("limits")["replicas"], ge=1)

    @field_validator("eps")
    @classmethod
    def _unit_interval(cls, value):
        if any(not 0.0 < e <= 1.0 for e in value):
            raise ValueError("every eps must lie in (0, 1]")
        if len(set(value)) != len(value):
            raise ValueError("eps values must be distinct")
        return sorted(value, reverse=True)

    @model_validator(mode="after")
    def _consistent(self):
        n = len(self.k_mat)
        if len(self.gamma) != n or len(self.x0) != n:
            raise ValueError(f"k_mat, gamma and x0 must share dimension {n}")
        return self

    def potential(self) -> Quadratic:
        return Quadratic(k_mat=self.k_mat)

    def noise_matrix(self) -> np.ndarray:
        """
        ``sigma`` for ``fixed_sim_temp``, ``varsigma`` for ``fixed_target_temp``.
        """
        beta = self.beta_bar if self.regime == "fixed_sim_temp" else self.beta
        return fdr_noise(self.gamma, beta)


class AepParams(_Block):
    """
    Quadratic-potential system whose entropy production is measured.

    Either ``m`` (skew part of the control) or ``b`` (the control itself) may
    be given; without both the optimal control is used.
    """

    k_mat: SpdMatrix = _defaults("aep")["k_mat"]
    gamma: SpdMatrix = _defaults("aep")["gamma"]
    beta_bar: float = Field(default=_defaults("aep")["beta_bar"], gt=0.0)
    beta: float = Field(default=_defaults("aep")["beta"], gt=0.0)
    m: Optional[Matrix] = _defaults("aep")["m"]
    b: Optional[Matrix] = _defaults("aep")["b"]
    sigma0_scale: float = Field(default=_defaults("aep")["sigma0_scale"], gt=0.0)
    t_max: float = Field(default=_defaults("aep")["t_max"], gt=0.0)
    n_times: int = Field(default=_defaults("aep")["n_times"], ge=2)
    n_samples: int = Field(default=_defaults("aep")["n_samples"], ge=2)

    @field_validator("m")
    @classmethod
    def _skew(cls, value):
        if value is not None and not is_skew_symmetric(np.asarray(value, dtype=float)):
            raise ValueError("m must be skew-symmetric")
        return value

    @model_validator(mode="after")
    def _admissible(self):
        if self.m is not None and self.b is not None:
            raise ValueError("give either m or b, not both")
        if len(self.k_mat) != len(self.gamma):
            raise ValueError("k_mat and gamma differ in size")
        _value_error(self.system)
        return self

    def potential(self) -> Quadratic:
        return Quadratic(k_mat=self.k_mat)

    def system(self) -> TwoTemperatureSystem:
        if self.b is None:
            m = None if self.m is None else np.asarray(self.m, dtype=float)
            return TwoTemperatureSystem.from_friction(self.gamma, self.beta_bar, self.beta, m)
        return TwoTemperatureSystem(
            gamma=self.gamma,
            sigma=fdr_noise(self.gamma, self.beta_bar),
            beta_bar=self.beta_bar,
            beta=self.beta,
            b=self.b,
        )

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.n_times)

    def sigma0(self) -> np.ndarray:
        return self.sigma0_scale * np.eye(2 * len(self.k_mat))


PARAMS = {
    "ou_kl": OuKlParams,
    "ratio": RatioParams,
    "bistable": BistableParams,
    "lj_cool": LjCoolParams,
    "limits": LimitsParams,
    "aep": AepParams,
}


class ExperimentConfig(BaseModel):
    """
    Validated experiment configuration.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    experiment: Literal["ou_kl", "ratio", "bistable", "lj_cool", "limits", "aep"]
    seed: int = Field(default=0, ge=0, lt=2**64)
    output_dir: str = "results"
    verbose: bool = False
    batchsize: int = Field(default=16, ge=1)

    ou_kl: Optional[OuKlParams] = None
    ratio: Optional[RatioParams] = None
    bistable: Optional[BistableParams] = None
    lj_cool: Optional[LjCoolParams] = None
    limits: Optional[LimitsParams] = None
    aep: Optional[AepParams] = None

    @model_validator(mode="after")
    def _one_block(self):
        for name in EXPERIMENTS:
            if name != self.experiment and getattr(self, name) is not None:
                raise ValueError(
                    f"block '{name}' does not belong to experiment '{self.experiment}'"
                )
        return self

    @property
    def params(self) -> BaseModel:
        block = getattr(self, self.experiment)
        return PARAMS[self.experiment]() if block is None else block

    def canonical(self) -> Dict[str, Any]:
        """
        Fully defaulted dictionary form; hashed into every output file.
        """
        data = self.model_dump(exclude={"output_dir", "verbose", "batchsize"}, mode="json")
        data[self.experiment] = self.params.model_dump(mode="json")
        return {k: v for k, v in data.items() if v is not None}


def validate_config(data: Dict[str, Any]) -> ExperimentConfig:
    """
    Validate a config dictionary.

    Raises:
        ConfigError: With the dotted key path of the first offending key.
    """
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    try:
        return ExperimentConfig.model_validate(data)
    except pydantic.ValidationError as e:
        raise config_error_from_pydantic(e) from e
    except LangevinGraphError as e:
        raise ConfigError(str(e), data.get("experiment")) from e


def load_config(path: str, overrides: Optional[Dict[str, Any]] = None) -> ExperimentConfig:
    """
    Read a JSON config file and apply CLI overrides (``seed``, ``output_dir``).

    Raises:
        ConfigError: If the file cannot be read or fails validation.
    """
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise ConfigError(f"cannot read config file '{path}': {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file '{path}' is not valid JSON: {e}") from e

    if isinstance(data, dict):
        data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return validate_config(data)
