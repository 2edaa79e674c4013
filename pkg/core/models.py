"""Validated domain types for the channel, statistics and secrecy layers."""

import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.settings import (
    SPEED_OF_LIGHT,
    get_monte_carlo_defaults,
    get_quadrature_defaults,
    get_series_defaults,
)

_SERIES = get_series_defaults()
_QUAD = get_quadrature_defaults()
_MC = get_monte_carlo_defaults()


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


class AlphaMuParams(_Frozen):
    """Shape triple of one alpha-mu distributed channel amplitude."""

    alpha: float = Field(..., gt=0, description="Nonlinearity exponent")
    mu: float = Field(..., gt=0, description="Clustering parameter")
    h_bar: float = Field(1.0, gt=0, description="Alpha-root mean value")


class PointingErrorParams(_Frozen):
    """Pointing-error severity and zero-error collected-power fraction."""

    phi: float = Field(..., gt=2, description="Severity ratio; must exceed 2")
    a0: float = Field(..., gt=0, le=1, description="Fraction of power collected without misalignment")


class LinkGeometry(_Frozen):
    """Source-RIS-node geometry and antenna gains (linear scale)."""

    frequency_hz: float = Field(..., gt=0)
    gain_tx: float = Field(..., gt=0)
    gain_rx: float = Field(..., gt=0)
    d1_m: float = Field(..., gt=0, description="Source to RIS distance")
    dr_m: float = Field(..., gt=0, description="RIS to node distance")
    kappa_a: float = Field(0.0, ge=0, description="Molecular absorption coefficient per meter")

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT / self.frequency_hz

    @property
    def total_distance_m(self) -> float:
        return self.d1_m + self.dr_m


class SeriesControl(_Frozen):
    """
    Truncation of the legitimate-link CDF series.

    k_max=None lets the evaluators pick the order from the truncation bound.
    empirical=True marks an order taken at the cap because the analytic bound
    cannot reach tol; summation then stops once the terms have stabilized.
    """

    k_max: Optional[int] = Field(None, ge=0, le=_SERIES["k_cap"])
    tol: float = Field(_SERIES["tol"], gt=0)
    empirical: bool = False


class QuadratureSpec(_Frozen):
    """Orders of the Simpson and Gauss-Laguerre rules."""

    simpson_order: int = Field(_QUAD["simpson_order"], ge=8)
    laguerre_order: int = Field(_QUAD["laguerre_order"], ge=1, le=256)
    cross_check: bool = _QUAD["cross_check"]


class SystemConfig(_Frozen):
    """Full wiretap scenario: RIS size, fading, pointing error, geometry, noise and rate."""

    n_elements: int = Field(..., ge=1)
    fading: AlphaMuParams
    pe: PointingErrorParams
    geom_ell: LinkGeometry
    geom_eve: LinkGeometry
    snr_tx_ell: float = Field(..., gt=0, description="Transmit power over legitimate noise variance")
    snr_tx_eve: float = Field(..., gt=0, description="Transmit power over eavesdropper noise variance")
    rs: float = Field(0.0, ge=0, description="Secrecy rate in bits/s/Hz")
    series: SeriesControl = SeriesControl()
    quad: QuadratureSpec = QuadratureSpec()

    def replace(self, **changes) -> "SystemConfig":
        """Copy with top-level fields replaced; the result is re-validated."""
        data = self.model_dump()
        for key, value in changes.items():
            data[key] = value.model_dump() if isinstance(value, BaseModel) else value
        return SystemConfig.model_validate(data)


class SecrecyParams(_Frozen):
    """Slope and offset of the outage event h_ell^2 <= M |h_e|^2 + L."""

    m_slope: float = Field(..., gt=0)
    l_offset: float = Field(..., ge=0)


class Branch(str, Enum):
    """Quadrature branch that produced an outage value."""

    SIMPSON = "simpson"
    GAUSS_LAGUERRE = "gauss_laguerre"
    ASYMPTOTIC = "asymptotic"


class SecrecyResult(_Frozen):
    """Outage value with the evaluation diagnostics."""

    value: float = Field(..., ge=0, le=1)
    branch: Branch
    k_max_used: int = Field(..., ge=0)
    truncation_bound: float = Field(..., ge=0, description="W at k_max_used; inf when not representable")
    quad_order: int = Field(..., ge=1)
    simpson_value: Optional[float] = Field(None, description="Simpson estimate whenever the Simpson rule ran")
    reference_gap: Optional[float] = Field(None, ge=0, description="|value - adaptive reference| when cross-checked")
    diagnostics: list[str] = Field(default_factory=list)


class LegitStats(_Frozen):
    """CLT parameters of the legitimate end-to-end gain h_ell^2."""

    n_elements: int = Field(..., ge=1)
    h1: float = Field(..., gt=0)
    h2: float = Field(..., gt=0)
    psi_n: float = Field(..., gt=0)
    g_n: float = Field(..., gt=0)
    b_n: float = Field(..., ge=0)
    log_b_n: float
    mean_h_ell_sq: float = Field(..., gt=0)
    pe: PointingErrorParams
    diagnostics: list[str] = Field(default_factory=list)

    @property
    def snr_ratio(self) -> float:
        """G_N / Psi_N, the quantity that drives series length and the bound."""
        return self.g_n / self.psi_n

    @property
    def knee(self) -> float:
        """A0^2 G_N, where the two regional truncation bounds meet."""
        return self.pe.a0 ** 2 * self.g_n


class EveStats(_Frozen):
    """Exponential-times-pointing-error parameters of the eavesdropper gain |h_e|^2."""

    n_elements: int = Field(..., ge=1)
    h2: float = Field(..., gt=0)
    pe: PointingErrorParams
    scale: float = Field(..., gt=0, description="N * h2^2 * a0^2")

    @model_validator(mode="after")
    def _check_scale(self) -> "EveStats":
        expected = self.n_elements * self.h2 ** 2 * self.pe.a0 ** 2
        if not math.isclose(self.scale, expected, rel_tol=1e-12):
            raise ValueError(f"scale must equal N*h2^2*a0^2 = {expected}, got {self.scale}")
        return self


class McRun(_Frozen):
    """Trial count, seed and chunking of one Monte-Carlo run."""

    n_trials: int = Field(_MC["n_trials"], ge=1)
    seed: int = Field(_MC["seed"], ge=0, lt=2 ** 64)
    chunk_size: int = Field(_MC["chunk_size"], ge=1)


class McEstimate(_Frozen):
    """Indicator-mean estimate with its normal-approximation standard error."""

    point: float = Field(..., ge=0, le=1)
    std_err: float = Field(..., ge=0)
    n_trials: int = Field(..., ge=1)


class SweepVariable(str, Enum):
    """Scenario quantities a sweep can vary."""

    D_R_EVE = "d_r_eve"
    N_ELEMENTS = "n_elements"
    SNR_DB = "snr_db"
    RS = "rs"


class SweepSpec(_Frozen):
    """Linear sweep of one scenario variable."""

    variable: SweepVariable
    start: float
    stop: float
    steps: int = Field(..., ge=2)

    @model_validator(mode="after")
    def _check_range(self) -> "SweepSpec":
        if not self.start < self.stop:
            raise ValueError(f"sweep start must be below stop, got {self.start} >= {self.stop}")
        return self
