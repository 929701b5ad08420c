import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from axial.algebra import Element
from axial.axis import classify_axis
from axial.constructions import dim2_algebra
from axial.errors import InputError
from axial.linalg import Matrix
from axial.miyamoto import (WHICH, AlgebraMap, OrbitOverflow, apply_to_axis, axis_orbit, is_automorphism, tau,
                            tau_delta, tau_diag, tau_lambda)

from conftest import dim2_lambdas


def test_dim2_tau_lambda(dim2):
    a, b = dim2.basis(0), dim2.basis(1)
    f = tau_lambda(classify_axis(dim2, a))
    assert f(b) == 2 * a - b
    assert f(a) == a


def test_dim2_off_diagonal_map_is_identity(dim2):
    # both off-diagonal pieces vanish, so nothing is negated
    assert tau_diag(classify_axis(dim2, dim2.basis(0))).is_identity()


def test_dim2_lambda_and_delta_agree(dim2):
    p = classify_axis(dim2, dim2.basis(1))
    assert tau_lambda(p) == tau_delta(p)


def test_matsuo_line_swaps_other_points(matsuo3):
    a, b, c = (matsuo3.basis(k) for k in range(3))
    f = tau_lambda(classify_axis(matsuo3, a))
    assert f(b) == c and f(c) == b and f(a) == a


def test_s4_tau_is_conjugation(matsuo6):
    """tau of the point (12) acts on the points as conjugation by (12)."""
    labels = matsuo6.basis_labels
    perms = {}
    for lbl in labels:
        i, j = int(lbl[1]) - 1, int(lbl[2]) - 1
        perms[lbl] = (i, j)

    def conj(s, t):
        swap = {s[0]: s[1], s[1]: s[0]}
        return tuple(sorted(swap.get(x, x) for x in t))

    for k, lbl in enumerate(labels):
        f = tau_lambda(classify_axis(matsuo6, matsuo6.basis(k)))
        for m, other in enumerate(labels):
            image = conj(perms[lbl], perms[other])
            target = next(idx for idx, l2 in enumerate(labels) if perms[l2] == image)
            assert f(matsuo6.basis(m)) == matsuo6.basis(target)


def _all_corpus_profiles(tables):
    for t in tables:
        for k in range(t.dim):
            yield t, classify_axis(t, t.basis(k))


@pytest.mark.parametrize("which", WHICH)
def test_involutive_automorphisms(which, dim2, matsuo3, matsuo6):
    for t, p in _all_corpus_profiles((dim2, matsuo3, matsuo6)):
        f = tau(p, which)
        assert (f @ f).is_identity()
        assert is_automorphism(t, f)


def test_composition(dim2, matsuo3, matsuo6):
    for _, p in _all_corpus_profiles((dim2, matsuo3, matsuo6)):
        assert tau_lambda(p) @ tau_delta(p) == tau_diag(p)
        assert tau_delta(p) @ tau_lambda(p) == tau_diag(p)


def test_images_are_axes_of_same_type(matsuo6):
    for _, p in _all_corpus_profiles((matsuo6,)):
        for w in WHICH:
            f = tau(p, w)
            for k in range(6):
                q = classify_axis(matsuo6, f(matsuo6.basis(k)))
                assert q.is_axis and q.type == p.type


@settings(max_examples=30)
@given(dim2_lambdas())
def test_dim2_image_axis_any_lambda(lam):
    t = dim2_algebra(lam)
    f = tau_lambda(classify_axis(t, t.basis(0)))
    img = f(t.basis(1))
    q = classify_axis(t, img)
    assert q.is_axis and q.type == (lam, 1 - lam)
    assert is_automorphism(t, f)


def test_unknown_map_name(matsuo3):
    with pytest.raises(InputError, match="unknown"):
        tau(classify_axis(matsuo3, matsuo3.basis(0)), "sideways")


def test_non_axis_profile_rejected(mat2):
    with pytest.raises(InputError):
        tau_lambda(classify_axis(mat2, mat2.basis(0)))


def test_non_automorphism_detected(matsuo3):
    scale = AlgebraMap(Matrix.diagonal([2, 1, 1]))
    assert not is_automorphism(matsuo3, scale)
    assert not is_automorphism(matsuo3, AlgebraMap(Matrix.zero(3)))


def test_permutation_automorphisms(matsuo3):
    for perm in itertools.permutations(range(3)):
        m = Matrix.from_columns([[1 if i == perm[j] else 0 for i in range(3)] for j in range(3)])
        assert is_automorphism(matsuo3, AlgebraMap(m))


def test_apply_to_axis_checks_dimensions(matsuo3, dim2):
    f = tau_lambda(classify_axis(matsuo3, matsuo3.basis(0)))
    with pytest.raises(InputError):
        apply_to_axis(dim2, f, dim2.basis(0))
    assert apply_to_axis(matsuo3, f, matsuo3.basis(1)) == matsuo3.basis(2)


def test_single_seed_is_fixed(matsuo6):
    assert axis_orbit(matsuo6, [matsuo6.basis(0)]) == [matsuo6.basis(0)]


def test_orbit_of_transpositions(matsuo6):
    # (12), (23), (34) generate the whole group, so every transposition appears
    seeds = [matsuo6.basis(matsuo6.index(s)) for s in ("(12)", "(23)", "(34)")]
    orbit = axis_orbit(matsuo6, seeds)
    assert sorted(e.coeffs for e in orbit) == sorted(matsuo6.basis(k).coeffs for k in range(6))


def test_orbit_line(matsuo3):
    assert len(axis_orbit(matsuo3, [matsuo3.basis(2), matsuo3.basis(0)])) == 3


def test_orbit_of_s3_points(matsuo6):
    seeds = [matsuo6.basis(matsuo6.index(s)) for s in ("(12)", "(13)")]
    labels = {matsuo6.basis_labels[e.coeffs.index(1)] for e in axis_orbit(matsuo6, seeds)}
    assert labels == {"(12)", "(13)", "(23)"}


def test_orbit_overflow_in_dim2():
    # for lambda = 1/3 the reflections generate an infinite dihedral orbit
    t = dim2_algebra(Fraction(1, 3))
    with pytest.raises(OrbitOverflow):
        axis_orbit(t, [t.basis(0), t.basis(1)], max_size=25)


def test_orbit_is_sorted(matsuo6):
    orbit = axis_orbit(matsuo6, [matsuo6.basis(3), matsuo6.basis(1)])
    assert [e.coeffs for e in orbit] == sorted(e.coeffs for e in orbit)
    assert all(isinstance(e, Element) for e in orbit)
