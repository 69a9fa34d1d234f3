import random
from fractions import Fraction

import pytest

from clifcpt.exact import (
    DimensionMismatchError,
    GaussMatrix,
    GaussRational,
    SingularMatrixError,
    format_gauss,
    kron,
    parse_gauss,
)
from gammas import gamma_matrices


def test_scalar_arithmetic_exact():
    a = GaussRational(Fraction(1, 2), Fraction(1, 3))
    b = GaussRational(Fraction(-1, 2), Fraction(2, 3))
    assert a + b == GaussRational(0, 1)
    assert a - a == GaussRational(0)
    assert (a - a).is_zero()
    assert a * GaussRational(0, 1) == GaussRational(Fraction(-1, 3), Fraction(1, 2))
    assert (a / a) == GaussRational(1)
    assert a.conjugate().conjugate() == a
    with pytest.raises(ZeroDivisionError):
        a / GaussRational(0)


@pytest.mark.parametrize(
    "value,text",
    [
        (GaussRational(0), "0"),
        (GaussRational(1), "1"),
        (GaussRational(-1), "-1"),
        (GaussRational(Fraction(1, 2)), "1/2"),
        (GaussRational(0, 1), "i"),
        (GaussRational(0, -1), "-i"),
        (GaussRational(0, 3), "3*i"),
        (GaussRational(0, Fraction(-2, 3)), "-2/3*i"),
        (GaussRational(Fraction(1, 2), Fraction(1, 2)), "1/2+1/2*i"),
        (GaussRational(Fraction(1, 2), Fraction(-1, 2)), "1/2-1/2*i"),
        (GaussRational(2, 1), "2+i"),
        (GaussRational(-1, -1), "-1-i"),
    ],
)
def test_scalar_format_and_parse(value, text):
    assert format_gauss(value) == text
    assert parse_gauss(text) == value


def test_scalar_parse_roundtrip_random():
    rng = random.Random(7)
    for _ in range(300):
        z = GaussRational(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        )
        assert parse_gauss(format_gauss(z)) == z


def test_matrix_identity_and_pauli_involution():
    eye = GaussMatrix.identity(3)
    assert eye * eye == eye
    sigma1 = GaussMatrix([[0, 1], [1, 0]])
    assert sigma1 * sigma1 == GaussMatrix.identity(2)


def test_gamma_products_anticommute():
    g0, g1, g2, g3 = gamma_matrices()
    assert g0 * g1 == -(g1 * g0)
    for a in (g0, g1, g2, g3):
        for b in (g0, g1, g2, g3):
            if a is not b:
                assert a * b == -(b * a)


def test_transpose_examples():
    g0, g1, g2, g3 = gamma_matrices()
    assert g0.transpose() == g0
    assert g1.transpose() == -g1
    assert g2.transpose() == g2  # purely imaginary but symmetric
    assert g3.transpose() == -g3
    eye = GaussMatrix.identity(4)
    assert eye.transpose() == eye


def test_conj_examples():
    g0, g1, g2, _ = gamma_matrices()
    assert g2.conj() == -g2
    assert g0.conj() == g0
    i_eye = GaussMatrix.identity(2).scale(GaussRational(0, 1))
    assert i_eye.conj() == -i_eye
    assert g1.conj() == g1


def test_inverse_examples():
    g0, g1, _, _ = gamma_matrices()
    eye = GaussMatrix.identity(4)
    assert eye.inverse() == eye
    assert g0.inverse() == g0  # g0^2 = I
    assert g1.inverse() == -g1  # g1^2 = -I
    assert g0 * g0.inverse() == eye


def _random_matrix(rng, dim):
    return GaussMatrix(
        [
            [
                GaussRational(
                    Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
                    Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
                )
                for _ in range(dim)
            ]
            for _ in range(dim)
        ]
    )


def _reference_mul(a, b):
    """Plain triple-loop product, independent of the library paths."""
    dim = a.dim
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            acc = GaussRational(0)
            for k in range(dim):
                acc = acc + a.rows[i][k] * b.rows[k][j]
            row.append(acc)
        rows.append(row)
    return GaussMatrix(rows)


def test_random_matrix_properties():
    rng = random.Random(11)
    for _ in range(25):
        dim = rng.randint(1, 4)
        a = _random_matrix(rng, dim)
        b = _random_matrix(rng, dim)
        ab = a * b
        assert ab == _reference_mul(a, b)
        assert ab.transpose() == b.transpose() * a.transpose()
        assert ab.conj() == a.conj() * b.conj()
        assert a.conj().conj() == a
        assert a.transpose().transpose() == a
        assert a + (-a) == a.scale(0)
        try:
            ainv, binv = a.inverse(), b.inverse()
        except SingularMatrixError:
            continue
        assert ab.inverse() == binv * ainv
        assert a * ainv == GaussMatrix.identity(dim)


def test_monomial_fast_path_agrees_with_reference():
    rng = random.Random(13)
    units = [GaussRational(1), GaussRational(-1), GaussRational(0, 1), GaussRational(0, -1)]
    for _ in range(40):
        dim = rng.choice([2, 4, 8])
        perm_a = list(range(dim))
        perm_b = list(range(dim))
        rng.shuffle(perm_a)
        rng.shuffle(perm_b)
        a = GaussMatrix(
            [[rng.choice(units) if j == perm_a[i] else 0 for j in range(dim)] for i in range(dim)]
        )
        b = GaussMatrix(
            [[rng.choice(units) if j == perm_b[i] else 0 for j in range(dim)] for i in range(dim)]
        )
        assert a * b == _reference_mul(a, b)
        assert a * a.inverse() == GaussMatrix.identity(dim)


def test_dimension_mismatch_and_singular_errors():
    with pytest.raises(DimensionMismatchError):
        GaussMatrix.identity(2) * GaussMatrix.identity(3)
    with pytest.raises(DimensionMismatchError):
        GaussMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(SingularMatrixError):
        GaussMatrix([[1, 1], [1, 1]]).inverse()


def test_matrix_string_roundtrip():
    g0, g1, g2, g3 = gamma_matrices()
    for g in (g0, g1, g2, g3):
        assert GaussMatrix.from_strings(g.to_strings()) == g


def test_kron_block_structure():
    s1 = GaussMatrix([[0, 1], [1, 0]])
    s3 = GaussMatrix([[1, 0], [0, -1]])
    k = kron(s3, s1)
    assert k.dim == 4
    assert k.rows[0][1] == GaussRational(1)
    assert k.rows[2][3] == GaussRational(-1)
    assert k * k == GaussMatrix.identity(4)
