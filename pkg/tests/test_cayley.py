import numpy as np
import pytest

from bruhatdiag.cayley import cayley, cayley_inverse, verify_image
from bruhatdiag.linalg import det, principal_block
from bruhatdiag.spaces import (
    Coordinates,
    SpaceSpec,
    aiii,
    build_tangent,
    ci,
    cii,
    diii,
    random_coordinates,
)

SAMPLE_SPECS = [
    aiii(2, 3), diii(3), ci(3), cii(2, 2),
    SpaceSpec("BDI_even", p=4, q=3), SpaceSpec("BDI_oddodd", p=3, q=3),
]


class TestCayleyMap:
    def test_zero_maps_to_identity(self):
        assert np.array_equal(cayley(np.zeros((3, 3))), np.eye(3))

    def test_rotation_plane(self):
        # hand multiplication: (1-X)(1+X)^{-1} for the standard plane rotation
        X = np.array([[0.0, 1.0], [-1.0, 0.0]])
        g = cayley(X)
        expect = np.array([[0.0, -1.0], [1.0, 0.0]])
        assert np.abs(g - expect).max() <= 1e-15

    def test_minor_from_coordinate_norm(self):
        # |z|^2 = 1/3 makes the leading minor (1 - 1/3)/(1 + 1/3) = 1/2
        z = np.sqrt(1.0 / 3.0)
        X = build_tangent(aiii(1, 1), Coordinates(family="AIII", Z=np.array([[z]])))
        g = cayley(X)
        assert abs(det(principal_block(g, 1)) - 0.5) <= 1e-12

    def test_unitary_on_random_tangents(self):
        rng = np.random.default_rng(2)
        for spec in SAMPLE_SPECS:
            X = build_tangent(spec, random_coordinates(spec, rng))
            g = cayley(X)
            assert np.abs(g.conj().T @ g - np.eye(spec.ambient)).max() <= 1e-10


class TestCayleyInverse:
    def test_identity_maps_to_zero(self):
        assert np.abs(cayley_inverse(np.eye(4))).max() == 0.0

    def test_round_trip(self):
        rng = np.random.default_rng(3)
        spec = aiii(3, 3)
        for _ in range(10):
            X = build_tangent(spec, random_coordinates(spec, rng))
            back = cayley_inverse(cayley(X))
            assert np.abs(back - X).max() <= 1e-9

    def test_minus_identity_rejected(self):
        with pytest.raises(ValueError, match="-1 in spectrum"):
            cayley_inverse(-np.eye(3))


class TestVerifyImage:
    def test_all_families_pass(self):
        rng = np.random.default_rng(4)
        for spec in SAMPLE_SPECS:
            for _ in range(25):
                X = build_tangent(spec, random_coordinates(spec, rng))
                report = verify_image(spec, cayley(X), tol=1e-9)
                assert report.ok, (spec.family, report.violations)

    def test_identity_passes_every_spec(self):
        for spec in SAMPLE_SPECS:
            report = verify_image(spec, np.eye(spec.ambient))
            assert report.ok

    def test_diagonal_stretch_fails_unitarity(self):
        report = verify_image(aiii(1, 1), np.diag([2.0, 0.5]))
        assert not report.ok
        assert report.violations["unitary"] > 1.0

    def test_involution_inverts_on_image(self):
        # the computational content of the equivariance lemma
        rng = np.random.default_rng(8)
        for spec in SAMPLE_SPECS:
            X = build_tangent(spec, random_coordinates(spec, rng))
            report = verify_image(spec, cayley(X), tol=1e-10)
            assert report.violations["involution_inverts"] <= 1e-10

    def test_shape_mismatch(self):
        with pytest.raises(ValueError, match="ambient"):
            verify_image(aiii(1, 1), np.eye(3))
