"""
fso_link.py

FSO physical layer: received power and photon-counting data rate as a
function of beam divergence angle and distance.
"""

import math
from dataclasses import dataclass, asdict
from typing import Any, Dict

import numpy as np

from .config import DEFAULT_CONFIG, PLANCK_CONSTANT, SPEED_OF_LIGHT
from .exceptions import InvalidParamsError


def dbm_to_watts(power_dbm: float) -> float:
    """Convert a power level in dBm to watts."""
    return 10.0 ** (power_dbm / 10.0) / 1000.0


def wavelength_to_frequency(wavelength: float) -> float:
    """Optical frequency in hertz for a wavelength in meters."""
    return SPEED_OF_LIGHT / wavelength


@dataclass(frozen=True)
class FsoLinkParams:
    """
    Physical-layer constants of a transmitter/receiver pair.

    Attributes:
        transmit_power: P_t in watts.
        aperture_diameter: receiver diameter D in meters.
        pointing_loss_tx, pointing_loss_rx: L_tp, L_rp in (0, 1].
        efficiency_tx, efficiency_rx: optical efficiencies in (0, 1].
        attenuation: alpha in dB/km.
        optical_frequency: f in hertz.
        detector_sensitivity: N_b in photons per bit.
    """
    transmit_power: float = dbm_to_watts(13.0)
    aperture_diameter: float = 0.012
    pointing_loss_tx: float = 1.0
    pointing_loss_rx: float = 1.0
    efficiency_tx: float = 1.0
    efficiency_rx: float = 1.0
    attenuation: float = 0.43
    optical_frequency: float = wavelength_to_frequency(1550e-9)
    detector_sensitivity: float = 0.1875
    planck_constant: float = PLANCK_CONSTANT

    def __post_init__(self):
        for name in ("transmit_power", "aperture_diameter", "optical_frequency",
                     "detector_sensitivity", "planck_constant"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise InvalidParamsError(f"{name} must be a positive finite number, got {value}")
        for name in ("pointing_loss_tx", "pointing_loss_rx", "efficiency_tx", "efficiency_rx"):
            value = getattr(self, name)
            if not (0.0 < value <= 1.0):
                raise InvalidParamsError(f"{name} must lie in (0, 1], got {value}")
        if not (self.attenuation >= 0 and math.isfinite(self.attenuation)):
            raise InvalidParamsError(f"attenuation must be >= 0 dB/km, got {self.attenuation}")

    @property
    def energy_per_bit(self) -> float:
        """h * f * N_b, joules needed per received bit."""
        return self.planck_constant * self.optical_frequency * self.detector_sensitivity

    @classmethod
    def from_config(cls, link_config: Dict[str, Any]) -> "FsoLinkParams":
        """Build from the 'link' config section (dBm power, wavelength in meters)."""
        section = {**DEFAULT_CONFIG["link"], **link_config}
        return cls(
            transmit_power=dbm_to_watts(float(section["transmit_power_dbm"])),
            aperture_diameter=float(section["aperture_diameter"]),
            pointing_loss_tx=float(section["pointing_loss_tx"]),
            pointing_loss_rx=float(section["pointing_loss_rx"]),
            efficiency_tx=float(section["efficiency_tx"]),
            efficiency_rx=float(section["efficiency_rx"]),
            attenuation=float(section["attenuation_db_per_km"]),
            optical_frequency=wavelength_to_frequency(float(section["wavelength"])),
            detector_sensitivity=float(section["detector_sensitivity"]),
        )

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def _check_geometry(theta, distance):
    if np.any(np.asarray(theta) <= 0):
        raise InvalidParamsError(f"Divergence angle must be positive, got {theta}")
    if np.any(np.asarray(distance) <= 0):
        raise InvalidParamsError(f"Distance must be positive, got {distance}")


def received_power(params: FsoLinkParams, theta, distance):
    """
    Received optical power in watts.

    P_r = P_t (D / (theta L))^2 L_tp L_rp eta_t eta_r 10^(-alpha L / 10^4),
    L in meters and alpha in dB/km. Accepts scalars or numpy arrays.
    """
    _check_geometry(theta, distance)
    geometry = (params.aperture_diameter / (np.multiply(theta, distance))) ** 2
    losses = (params.pointing_loss_tx * params.pointing_loss_rx
              * params.efficiency_tx * params.efficiency_rx)
    atmosphere = 10.0 ** (-params.attenuation * np.asarray(distance, dtype=float) / 1e4)
    power = params.transmit_power * geometry * losses * atmosphere
    return float(power) if np.ndim(power) == 0 else power


def data_rate(params: FsoLinkParams, theta, distance):
    """Effective data rate in bits/s: received power over h*f*N_b."""
    rate = np.divide(received_power(params, theta, distance), params.energy_per_bit)
    return float(rate) if np.ndim(rate) == 0 else rate
