"""Dispersion of a uniaxial chi(2) crystal (reference material: beta-BBO).

Units throughout the package: lengths in um, times in fs, transverse
wave-numbers q in 1/um, frequency offsets Omega in rad/fs. The signal is
an ordinary wave at the degenerate carrier (twice the pump wavelength);
the pump is extraordinary, propagating at the cut angle ``theta_c`` from
the optic axis. Tilting a wave-vector by q_x changes the angle it forms
with the optic axis, which is how the angle-dependent extraordinary index
(and hence Poynting walk-off) enters the propagation phases at all orders.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

C_UM_FS = 0.299792458  # vacuum speed of light, um/fs

# Wavelength band over which the Sellmeier fits are trusted (um).
SELLMEIER_BAND_UM = (0.4, 1.5)


@dataclass(frozen=True)
class Sellmeier:
    """Coefficients of n^2 = a + b / (lam^2 - c) - d * lam^2, lam in um."""

    a: float
    b: float
    c: float
    d: float

    def index(self, lam_um):
        lam2 = np.asarray(lam_um, dtype=float) ** 2
        n2 = self.a + self.b / (lam2 - self.c) - self.d * lam2
        return np.sqrt(n2)


# Kato-type dispersion fits for beta-BBO.
BBO_ORDINARY = Sellmeier(2.7359, 0.01878, 0.01822, 0.01354)
BBO_EXTRAORDINARY = Sellmeier(2.3753, 0.01224, 0.01667, 0.01516)


class DispersionDomainError(ValueError):
    """Wavelength outside the validated Sellmeier band."""


def _check_band(lam_um):
    lam = np.asarray(lam_um, dtype=float)
    lo, hi = SELLMEIER_BAND_UM
    if np.any(lam < lo) or np.any(lam > hi):
        raise DispersionDomainError(
            f"wavelength {np.min(lam):.4g}..{np.max(lam):.4g} um outside the "
            f"validated band [{lo}, {hi}] um"
        )
    return lam


class EvanescentModeError(ValueError):
    """q exceeds the total wave-number: no propagating longitudinal mode."""


@dataclass(frozen=True)
class CrystalParams:
    """Geometry and material dispersion of the nonlinear slab."""

    length_um: float
    cut_angle_rad: float
    pump_wavelength_nm: float
    sellmeier_o: Sellmeier = field(default=BBO_ORDINARY)
    sellmeier_e: Sellmeier = field(default=BBO_EXTRAORDINARY)

    def __post_init__(self):
        if not self.length_um > 0:
            raise ValueError("crystal length must be positive")
        if not 0 < self.cut_angle_rad < np.pi / 2:
            raise ValueError("cut angle must lie in (0, pi/2)")

    @property
    def signal_wavelength_nm(self) -> float:
        return 2.0 * self.pump_wavelength_nm

    @property
    def omega_pump(self) -> float:
        """Pump carrier angular frequency, rad/fs."""
        return 2 * np.pi * C_UM_FS / (self.pump_wavelength_nm * 1e-3)

    @property
    def omega_signal(self) -> float:
        return 0.5 * self.omega_pump

    # -- refractive indices -------------------------------------------------

    def index_ordinary(self, lam_um):
        return self.sellmeier_o.index(_check_band(lam_um))

    def index_extraordinary(self, lam_um, theta=None):
        """Angle-dependent extraordinary index.

        ``theta`` is the angle between the wave-vector and the optic axis;
        defaults to the cut angle. theta=0 recovers the ordinary index,
        theta=pi/2 the principal extraordinary index.
        """
        lam = _check_band(lam_um)
        if theta is None:
            theta = self.cut_angle_rad
        no = self.sellmeier_o.index(lam)
        ne = self.sellmeier_e.index(lam)
        ct, st = np.cos(theta), np.sin(theta)
        return 1.0 / np.sqrt((ct / no) ** 2 + (st / ne) ** 2)

    def refractive_index(self, lam_um, polarization: str, theta=None):
        if polarization == "ordinary":
            return self.index_ordinary(lam_um)
        if polarization == "extraordinary":
            return self.index_extraordinary(lam_um, theta)
        raise ValueError(f"unknown polarization {polarization!r}")

    # -- wave-numbers --------------------------------------------------------

    def k_signal(self, omega):
        """Ordinary-signal wave-number at carrier offset ``omega`` (rad/fs)."""
        w = self.omega_signal + np.asarray(omega, dtype=float)
        return self.index_ordinary(2 * np.pi * C_UM_FS / w) * w / C_UM_FS

    def k_pump(self, qx, omega):
        """Extraordinary-pump wave-number, direction-resolved.

        The wave-vector (q_x, k_z) makes the angle theta_c + asin(q_x/k)
        with the optic axis (positive q_x tilts away from the axis); the
        implicit relation k = n_e(theta(k)) w/c is solved by fixed-point
        iteration, converging to machine precision in a few rounds.
        """
        w = self.omega_pump + np.asarray(omega, dtype=float)
        lam = 2 * np.pi * C_UM_FS / w
        q = np.asarray(qx, dtype=float)
        k = self.index_extraordinary(lam) * w / C_UM_FS
        for _ in range(6):
            theta = self.cut_angle_rad + np.arcsin(q / k)
            k = self.index_extraordinary(lam, theta) * w / C_UM_FS
        return k

    def kz(self, qx, omega, fieldname: str):
        """Longitudinal wave-number sqrt(k^2 - q^2) of 'signal' or 'pump'."""
        q = np.asarray(qx, dtype=float)
        if fieldname == "signal":
            k = self.k_signal(omega)
        elif fieldname == "pump":
            k = self.k_pump(qx, omega)
        else:
            raise ValueError(f"unknown field {fieldname!r}")
        k2 = k * k - q * q
        if np.any(k2 <= 0):
            raise EvanescentModeError(
                "evanescent mode: |q| exceeds the wave-number; shrink the q window"
            )
        return np.sqrt(k2)

    # -- phase mismatch -------------------------------------------------------

    def mismatch_full_lc(self, w_signal, w_idler):
        """D(w; w0-w) * l_c for a pump photon in w0 = w_signal + w_idler.

        Both arguments are (q_x, Omega) pairs of arrays; returns the
        dimensionless mismatch over the crystal length.
        """
        qs, ws = w_signal
        qi, wi = w_idler
        d = (
            self.kz(qs, ws, "signal")
            + self.kz(qi, wi, "signal")
            - self.kz(np.asarray(qs) + qi, np.asarray(ws) + wi, "pump")
        )
        return d * self.length_um

    def mismatch_pwp_lc(self, qx, omega):
        """Plane-wave-pump mismatch D(w) l_c = D(w, -w) l_c."""
        q = np.asarray(qx, dtype=float)
        w = np.asarray(omega, dtype=float)
        return self.mismatch_full_lc((q, w), (-q, -w))


@dataclass(frozen=True)
class WalkoffConstants:
    """Group-order dispersion constants over one crystal length.

    ``tau_gvm`` and ``l_woff`` are the temporal and transverse displacement
    of the signal relative to the pump accumulated over the full crystal;
    the signal envelope exits centred at (l_woff/2, tau_gvm/2) in pump-
    centred output coordinates. In the linear expansion of the mismatch
    the Omega_0 coefficient is tau_gvm while the q_0x coefficient is
    -l_woff (the relative sign traces back to the q.r - Omega.t Fourier
    convention).
    """

    tau_gvm_fs: float
    l_woff_um: float
    rho_p_rad: float
    kprime_s: float  # 1/v_g of the signal, fs/um
    kprime_p: float  # 1/v_g of the pump, fs/um
    kdprime_s: float  # signal GVD, fs^2/um

    @property
    def taylor_omega0(self) -> float:
        """Omega_0 coefficient of the linearized mismatch, times l_c (fs)."""
        return self.tau_gvm_fs

    @property
    def taylor_q0x(self) -> float:
        """q_0x coefficient of the linearized mismatch, times l_c (um)."""
        return -self.l_woff_um

    @property
    def xi_m(self) -> tuple[float, float]:
        """Signal-pump output offset (x in um, t in fs)."""
        return (0.5 * self.l_woff_um, 0.5 * self.tau_gvm_fs)


def walkoff_constants(crystal: CrystalParams, domega=1e-3, dq=1e-4) -> WalkoffConstants:
    """Centered-difference group constants at the carrier, on axis.

    Default steps give ~8 significant digits; halving them moves tau_gvm
    by well under 1e-4 relative.
    """
    lc = crystal.length_um

    def ks(w):
        return float(crystal.k_signal(w))

    def kp(w):
        return float(crystal.k_pump(0.0, w))

    kprime_s = (ks(domega) - ks(-domega)) / (2 * domega)
    kprime_p = (kp(domega) - kp(-domega)) / (2 * domega)
    h2 = 10 * domega
    kdprime_s = (ks(h2) - 2 * ks(0.0) + ks(-h2)) / h2**2

    kzp = lambda q: float(crystal.kz(q, 0.0, "pump"))
    rho_p = (kzp(dq) - kzp(-dq)) / (2 * dq)

    return WalkoffConstants(
        tau_gvm_fs=lc * (kprime_s - kprime_p),
        l_woff_um=lc * rho_p,
        rho_p_rad=rho_p,
        kprime_s=kprime_s,
        kprime_p=kprime_p,
        kdprime_s=kdprime_s,
    )


def solve_matching_angle(
    length_um: float,
    pump_wavelength_nm: float,
    sellmeier_o: Sellmeier = BBO_ORDINARY,
    sellmeier_e: Sellmeier = BBO_EXTRAORDINARY,
) -> float:
    """Cut angle for degenerate collinear matching, D(0) = 0."""

    def mismatch(theta):
        c = CrystalParams(length_um, theta, pump_wavelength_nm, sellmeier_o, sellmeier_e)
        return float(c.mismatch_pwp_lc(0.0, 0.0))

    return brentq(mismatch, np.radians(5.0), np.radians(85.0), xtol=1e-12)


def bbo_515_type1(length_um: float = 2000.0) -> CrystalParams:
    """The reference configuration: 2 mm BBO, 515 nm pump, type I e-oo.

    The cut angle is solved from the collinear matching condition rather
    than hard-coded.
    """
    theta = solve_matching_angle(length_um, 515.0)
    return CrystalParams(length_um, theta, 515.0)


CRYSTAL_PRESETS = {
    "BBO-515-typeI": bbo_515_type1,
}
