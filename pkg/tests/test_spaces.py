import numpy as np
import pytest

from bruhatdiag.linalg import antitranspose
from bruhatdiag.spaces import (
    Coordinates,
    CoordinateError,
    SpaceSpec,
    aiii,
    bdi,
    build_tangent,
    ci,
    cii,
    coordinates_from_json,
    coordinates_to_json,
    coroots,
    diii,
    involution_apply,
    involution_matrix,
    random_coordinates,
    validate_tangent,
    zero_coordinates,
)

ALL_SPECS = [
    aiii(1, 1), aiii(2, 3),
    diii(2), diii(3),
    ci(1), ci(3),
    cii(1, 1), cii(2, 2),
    SpaceSpec("BDI_even", p=4, q=3), SpaceSpec("BDI_even", p=2, q=1),
    SpaceSpec("BDI_oddodd", p=3, q=3), SpaceSpec("BDI_oddodd", p=5, q=1),
]


class TestSpecValidation:
    def test_aiii_requires_m_le_n(self):
        with pytest.raises(ValueError, match="m <= n"):
            aiii(3, 2)

    def test_bdi_dispatch(self):
        assert bdi(4, 3).family == "BDI_even"
        assert bdi(3, 3).family == "BDI_oddodd"
        with pytest.raises(ValueError):
            bdi(3, 2)

    def test_bdi_even_parity(self):
        with pytest.raises(ValueError):
            SpaceSpec("BDI_even", p=3, q=2)

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            SpaceSpec("AIV", n=2)

    def test_ambient_sizes(self):
        assert aiii(2, 3).ambient == 5
        assert diii(3).ambient == 6
        assert ci(3).ambient == 6
        assert cii(2, 2).ambient == 8
        assert SpaceSpec("BDI_even", p=4, q=3).ambient == 7
        assert SpaceSpec("BDI_oddodd", p=3, q=3).ambient == 6


class TestBuildTangent:
    def test_rank_one_grassmannian(self):
        z = 0.3 + 0.4j
        X = build_tangent(aiii(1, 1), Coordinates(family="AIII", Z=np.array([[z]])))
        expect = np.array([[0, z], [-np.conj(z), 0]])
        assert np.array_equal(X, expect)

    def test_zero_coordinates_give_zero(self):
        for spec in ALL_SPECS:
            X = build_tangent(spec, zero_coordinates(spec))
            assert np.abs(X).max() == 0.0

    def test_doubled_column_layout(self):
        # p = 2, q = 1 real case: single coordinate appears in four slots
        z = 0.25 - 0.5j
        spec = SpaceSpec("BDI_even", p=2, q=1)
        X = build_tangent(spec, Coordinates(family="BDI_even", Z=np.array([[z]])))
        expect = np.array([
            [0, z, 0],
            [-np.conj(z), 0, -z],
            [0, np.conj(z), 0],
        ])
        assert np.array_equal(X, expect)

    def test_odd_odd_low_dimensional_layout(self):
        # p = 3, q = 1: one outer coordinate plus the central torus parameter
        w, s = 0.3 + 0.1j, 0.5
        spec = SpaceSpec("BDI_oddodd", p=3, q=1)
        coords = Coordinates(family="BDI_oddodd",
                             Z1=np.zeros((1, 0)), Z2=np.zeros((1, 0)),
                             w1=np.array([w]), w2=np.zeros(0), s=s)
        X = build_tangent(spec, coords)
        wc = np.conj(w)
        expect = np.array([
            [0, w, -w, 0],
            [-wc, 1j * s, 0, w],
            [wc, 0, -1j * s, -w],
            [0, -wc, wc, 0],
        ])
        assert np.abs(X - expect).max() == 0.0

    def test_diii_payload_symmetry_enforced(self):
        Z = np.array([[0.1, 0.2], [0.3, 0.4]], dtype=complex)
        with pytest.raises(CoordinateError, match="antitranspose"):
            build_tangent(diii(2), Coordinates(family="DIII", Z=Z))

    def test_ci_payload_symmetry_enforced(self):
        Z = np.array([[0.1, 0.2], [0.3, 0.4]], dtype=complex)
        with pytest.raises(CoordinateError):
            build_tangent(ci(2), Coordinates(family="CI", Z=Z))

    def test_dimension_mismatch(self):
        with pytest.raises(CoordinateError, match="shape"):
            build_tangent(aiii(2, 3), Coordinates(family="AIII", Z=np.zeros((2, 2))))

    def test_family_mismatch(self):
        with pytest.raises(CoordinateError, match="tagged"):
            build_tangent(aiii(1, 1), Coordinates(family="CI", Z=np.zeros((1, 1))))


class TestValidateTangent:
    def test_random_builds_pass(self):
        rng = np.random.default_rng(5)
        for spec in ALL_SPECS:
            for _ in range(5):
                X = build_tangent(spec, random_coordinates(spec, rng))
                report = validate_tangent(spec, X, tol=1e-12)
                assert report.ok, (spec.family, report.violations)

    def test_identity_fails_skew_check(self):
        spec = aiii(1, 1)
        report = validate_tangent(spec, np.eye(2))
        assert not report.ok
        assert report.violations["skew_hermitian"] == pytest.approx(2.0)

    def test_perturbation_is_pinpointed(self):
        rng = np.random.default_rng(9)
        spec = diii(3)
        X = build_tangent(spec, random_coordinates(spec, rng))
        X = X.copy()
        X[0, 3] += 1e-3  # breaks skew-Hermitianity and the reflection pairing
        report = validate_tangent(spec, X, tol=1e-9)
        assert not report.ok
        assert report.violations["reflection"] == pytest.approx(1e-3, rel=1e-6)
        assert report.violations["skew_hermitian"] == pytest.approx(1e-3, rel=1e-6)

    def test_diii_antidiagonal_zero(self):
        rng = np.random.default_rng(1)
        X = build_tangent(diii(3), random_coordinates(diii(3), rng))
        anti = np.array([X[i, 5 - i] for i in range(6)])
        assert np.abs(anti).max() == 0.0


class TestInvolution:
    def test_matrix_is_involutive(self):
        for spec in ALL_SPECS:
            I = involution_matrix(spec)
            assert np.abs(I @ I - np.eye(spec.ambient)).max() == 0.0

    def test_diagonal_matrices_fixed_for_inner(self):
        spec = cii(2, 2)
        D = np.diag(np.arange(1, 9).astype(complex))
        assert np.array_equal(involution_apply(spec, D), D)

    def test_rank_one_sign_flip(self):
        z = 0.7 - 0.2j
        spec = aiii(1, 1)
        X = build_tangent(spec, Coordinates(family="AIII", Z=np.array([[z]])))
        out = involution_apply(spec, X)
        assert np.array_equal(out, -X)

    def test_double_application_identity(self):
        rng = np.random.default_rng(13)
        for spec in ALL_SPECS:
            A = rng.standard_normal((spec.ambient,) * 2) \
                + 1j * rng.standard_normal((spec.ambient,) * 2)
            back = involution_apply(spec, involution_apply(spec, A))
            assert np.abs(back - A).max() <= 1e-12 * max(1.0, np.abs(A).max())

    def test_outer_involution_negates_tangent(self):
        rng = np.random.default_rng(17)
        spec = SpaceSpec("BDI_oddodd", p=3, q=3)
        X = build_tangent(spec, random_coordinates(spec, rng))
        assert np.abs(involution_apply(spec, X) + X).max() <= 1e-12


class TestCoroots:
    def test_rank_two_unitary_case(self):
        sys = coroots(aiii(1, 2))
        assert [v.tolist() for v in sys.vectors] == [[1, -1, 0], [0, 1, -1]]
        assert sys.terminal_index is None

    def test_symplectic_n2(self):
        sys = coroots(ci(2))
        assert [v.tolist() for v in sys.vectors] == [
            [1, -1, 1, -1],
            [0, 1, -1, 0],
        ]
        assert sys.product_indices == (1, 2)

    def test_orthogonal_n2(self):
        sys = coroots(diii(2))
        assert [v.tolist() for v in sys.vectors] == [
            [1, -1, 1, -1],
            [1, 1, -1, -1],
        ]
        assert sys.terminal_index == 2
        # the half combination resolves to integer exponents
        assert sys.terminal_numerators.tolist() == [0, 2, -2, 0]

    def test_odd_ambient_terminal(self):
        sys = coroots(SpaceSpec("BDI_even", p=4, q=3))
        assert sys.terminal_index == 3
        assert sys.terminal_numerators.tolist() == [0, 0, 2, 0, -2, 0, 0]

    def test_all_vectors_traceless(self):
        for spec in ALL_SPECS:
            sys = coroots(spec)
            for v in sys.vectors:
                assert v.sum() == 0
            if sys.terminal_numerators is not None:
                assert sys.terminal_numerators.sum() == 0
                assert np.all(sys.terminal_numerators % 2 == 0)

    def test_degenerate_corners(self):
        # the n = 1 orthogonal space is a point: empty exponent system
        assert coroots(diii(1)).vectors == ()
        # the smallest doubly-odd layout keeps its bare torus generator
        sys = coroots(SpaceSpec("BDI_oddodd", p=1, q=1))
        assert [v.tolist() for v in sys.vectors] == [[1, -1]]
        assert sys.terminal_index is None


class TestCoordinateJson:
    def test_round_trip(self):
        rng = np.random.default_rng(23)
        for spec in ALL_SPECS:
            coords = random_coordinates(spec, rng)
            obj = coordinates_to_json(spec, coords)
            spec2, coords2 = coordinates_from_json(obj)
            assert spec2 == spec
            assert np.abs(build_tangent(spec, coords)
                          - build_tangent(spec2, coords2)).max() == 0.0

    def test_missing_payload_field(self):
        with pytest.raises(ValueError, match='"Z"'):
            coordinates_from_json({"family": "AIII", "params": {"m": 1, "n": 1},
                                   "payload": {}})

    def test_random_entries_within_radius(self):
        rng = np.random.default_rng(31)
        coords = random_coordinates(aiii(2, 3), rng, radius=0.7)
        assert np.abs(coords.Z).max() <= 0.7

    def test_diii_random_payload_is_reflection_odd(self):
        rng = np.random.default_rng(37)
        coords = random_coordinates(diii(4), rng)
        assert np.abs(coords.Z + antitranspose(coords.Z)).max() == 0.0
