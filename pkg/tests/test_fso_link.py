#!/usr/bin/env python3
"""
Test FSO Link

Tests for the received-power and data-rate model and its parameter checks.
"""

import math
import sys
import unittest
from dataclasses import replace
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

from fso_multicast.config import DEFAULT_CONFIG, PLANCK_CONSTANT, SPEED_OF_LIGHT
from fso_multicast.exceptions import InvalidParamsError
from fso_multicast.fso_link import (
    FsoLinkParams, data_rate, dbm_to_watts, received_power, wavelength_to_frequency,
)


def reference_power(theta, distance, transmit_power=0.019952623149688795, diameter=0.012, alpha=0.43):
    return transmit_power * (diameter / (theta * distance)) ** 2 * 10 ** (-alpha * distance / 1e4)


class TestUnitConversions(unittest.TestCase):

    def test_dbm_to_watts(self):
        self.assertAlmostEqual(dbm_to_watts(0.0), 1e-3, places=15)
        self.assertAlmostEqual(dbm_to_watts(13.0), 0.0199526, places=7)
        self.assertAlmostEqual(dbm_to_watts(30.0), 1.0, places=12)

    def test_wavelength_to_frequency(self):
        self.assertAlmostEqual(wavelength_to_frequency(1550e-9) / 1e14, 1.934145, places=5)


class TestFsoLinkParams(unittest.TestCase):
    """Test defaults, validation and config loading."""

    def test_defaults_match_link_section(self):
        params = FsoLinkParams()
        self.assertEqual(params, FsoLinkParams.from_config(DEFAULT_CONFIG["link"]))
        self.assertEqual(params.aperture_diameter, 0.012)
        self.assertEqual(params.detector_sensitivity, 0.1875)

    def test_energy_per_bit(self):
        expected = PLANCK_CONSTANT * SPEED_OF_LIGHT / 1550e-9 * 0.1875
        self.assertAlmostEqual(FsoLinkParams().energy_per_bit / expected, 1.0, places=12)
        self.assertAlmostEqual(FsoLinkParams().energy_per_bit, 2.4029587e-20, delta=1e-26)

    def test_from_config_partial_override(self):
        params = FsoLinkParams.from_config({"transmit_power_dbm": 0.0, "attenuation_db_per_km": 0.0})
        self.assertAlmostEqual(params.transmit_power, 1e-3, places=15)
        self.assertEqual(params.attenuation, 0.0)
        self.assertEqual(params.aperture_diameter, 0.012)

    def test_rejects_bad_values(self):
        bad = [
            {"transmit_power": 0.0},
            {"aperture_diameter": -0.01},
            {"pointing_loss_tx": 0.0},
            {"efficiency_rx": 1.5},
            {"attenuation": -0.1},
            {"detector_sensitivity": 0.0},
            {"optical_frequency": math.inf},
        ]
        for kwargs in bad:
            with self.subTest(kwargs=kwargs):
                with self.assertRaises(InvalidParamsError):
                    FsoLinkParams(**kwargs)

    def test_to_dict(self):
        data = FsoLinkParams().to_dict()
        self.assertEqual(data["aperture_diameter"], 0.012)
        self.assertIn("optical_frequency", data)


class TestReceivedPower(unittest.TestCase):
    """Test the received power model."""

    def setUp(self):
        self.params = FsoLinkParams()

    def test_matches_closed_form(self):
        for theta, distance in [(0.01, 100.0), (0.001, 20.0), (math.pi / 12, 150.0), (1.0, 1.0)]:
            with self.subTest(theta=theta, distance=distance):
                value = received_power(self.params, theta, distance)
                self.assertAlmostEqual(value / reference_power(theta, distance), 1.0, places=12)

    def test_reference_value(self):
        self.assertAlmostEqual(received_power(self.params, 0.01, 100.0), 2.84487e-6, delta=1e-10)

    def test_clear_air_reference_value(self):
        """13 dBm, 12 mm aperture, unity losses, no attenuation, 0.01 rad at 100 m."""
        params = FsoLinkParams(attenuation=0.0)
        value = received_power(params, 0.01, 100.0)
        self.assertAlmostEqual(value / (dbm_to_watts(13.0) * 0.012 ** 2), 1.0, places=12)
        self.assertAlmostEqual(value / 2.8732e-6, 1.0, delta=1e-4)

    def test_attenuation_factorizes(self):
        clear = received_power(FsoLinkParams(attenuation=0.0), 0.05, 120.0)
        for alpha in (0.43, 2.0, 10.0):
            with self.subTest(alpha=alpha):
                power = received_power(FsoLinkParams(attenuation=alpha), 0.05, 120.0)
                self.assertAlmostEqual(power * 10 ** (alpha * 120.0 / 1e4) / clear, 1.0, places=12)

    def test_inverse_square_in_angle(self):
        ratio = received_power(self.params, 0.01, 100.0) / received_power(self.params, 0.02, 100.0)
        self.assertAlmostEqual(ratio, 4.0, places=12)

    def test_unity_geometry_returns_transmit_power(self):
        """theta * L == D with unity losses and no attenuation."""
        params = FsoLinkParams(attenuation=0.0)
        self.assertAlmostEqual(received_power(params, 0.012, 1.0) / params.transmit_power, 1.0, places=12)
        self.assertAlmostEqual(received_power(params, 0.0012, 10.0) / params.transmit_power, 1.0, places=12)

    def test_attenuation_free_is_pure_inverse_square(self):
        params = FsoLinkParams(attenuation=0.0)
        ratio = received_power(params, 0.01, 50.0) / received_power(params, 0.01, 100.0)
        self.assertAlmostEqual(ratio, 4.0, places=12)

    def test_monotone_decreasing(self):
        thetas = np.linspace(0.001, math.pi / 2, 50)
        powers = received_power(self.params, thetas, 100.0)
        self.assertTrue(np.all(np.diff(powers) < 0))
        distances = np.linspace(1.0, 150.0, 50)
        powers = received_power(self.params, 0.05, distances)
        self.assertTrue(np.all(np.diff(powers) < 0))

    def test_array_input_matches_scalars(self):
        distances = np.array([20.0, 75.0, 150.0])
        vector = received_power(self.params, 0.02, distances)
        self.assertIsInstance(vector, np.ndarray)
        for d, v in zip(distances, vector):
            self.assertAlmostEqual(v / received_power(self.params, 0.02, float(d)), 1.0, places=12)

    def test_scalar_returns_float(self):
        self.assertIsInstance(received_power(self.params, 0.01, 100.0), float)

    def test_non_positive_inputs(self):
        with self.assertRaises(InvalidParamsError):
            received_power(self.params, 0.0, 100.0)
        with self.assertRaises(InvalidParamsError):
            received_power(self.params, 0.01, 0.0)
        with self.assertRaises(InvalidParamsError):
            data_rate(self.params, -0.01, 10.0)


class TestDataRate(unittest.TestCase):
    """Test the photon-counting data rate."""

    def setUp(self):
        self.params = FsoLinkParams()

    def test_rate_is_power_over_energy_per_bit(self):
        rate = data_rate(self.params, 0.01, 100.0)
        self.assertAlmostEqual(rate * self.params.energy_per_bit / received_power(self.params, 0.01, 100.0),
                               1.0, places=12)

    def test_reference_value(self):
        self.assertAlmostEqual(data_rate(self.params, 0.01, 100.0) / 1.18390e14, 1.0, delta=1e-5)

    def test_clear_air_reference_value(self):
        params = FsoLinkParams(attenuation=0.0)
        rate = data_rate(params, 0.01, 100.0)
        self.assertAlmostEqual(rate * params.energy_per_bit / (dbm_to_watts(13.0) * 0.012 ** 2), 1.0, places=12)
        self.assertAlmostEqual(rate / 1.1956e14, 1.0, delta=1e-4)

    def test_monotone_in_link_parameters(self):
        base = data_rate(self.params, 0.01, 100.0)
        self.assertLess(data_rate(replace(self.params, detector_sensitivity=0.375), 0.01, 100.0), base)
        self.assertGreater(data_rate(replace(self.params, transmit_power=0.04), 0.01, 100.0), base)
        self.assertGreater(data_rate(replace(self.params, aperture_diameter=0.024), 0.01, 100.0), base)
        self.assertLess(data_rate(replace(self.params, transmit_power=0.001), 0.01, 100.0), base)

    def test_scaling_laws(self):
        base = data_rate(self.params, 0.01, 100.0)
        self.assertAlmostEqual(data_rate(self.params, 0.03, 100.0) * 9 / base, 1.0, places=12)
        clear = FsoLinkParams(attenuation=0.0)
        self.assertAlmostEqual(data_rate(clear, 0.01, 25.0) / (16 * data_rate(clear, 0.01, 100.0)), 1.0, places=12)

    def test_transfer_time_for_100_gb(self):
        """100 GB at theta=0.01 rad, 100 m takes a few milliseconds."""
        seconds = 8e11 / data_rate(self.params, 0.01, 100.0)
        self.assertAlmostEqual(seconds, 6.757e-3, delta=1e-5)


if __name__ == '__main__':
    unittest.main()
