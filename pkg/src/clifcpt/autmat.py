"""Construction and certification of the seven discrete-symmetry matrices
W, E, C, Pi, K, S, F for a certified spin basis.

Each matrix is a signed product of generator matrices and must satisfy
its defining intertwining condition exhaustively over all generators:

    W  g W^-1            = -g          (grade involution)
    E  g^T E^-1          =  g          (reversion)
    C  g^T C^-1          = -g          (conjugation, C = E W^T)
    Pi conj(g) Pi^-1     =  g          (pseudo map, K = Pi W etc.)
    K  conj(g) K^-1      = -g
    S  conj(g^T) S^-1    =  g
    F  conj(g^T) F^-1    = -g
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import blade_indices
from .exact import GaussMatrix
from .spinrep import BasisProfile, SpinBasis, certify_spinbasis, product_over

ELEMENT_NAMES = ("I", "W", "E", "C", "Pi", "K", "S", "F")

SKEW_PRODUCT = "skew_product"
SYM_PRODUCT = "sym_product"
COMPLEX_PRODUCT = "complex_product"
REAL_PRODUCT = "real_product"
IDENTITY = "identity"


class ConditionError(RuntimeError):
    """An automorphism matrix fails its defining intertwining condition."""


SigTuple = tuple[int, int, int, int, int, int, int]


def sig_str(signs: tuple[int, ...]) -> str:
    return "(" + ",".join("+" if s > 0 else "-" for s in signs) + ")"


def minus_count(signs: tuple[int, ...]) -> int:
    return sum(1 for s in signs if s < 0)


@dataclass(frozen=True)
class AutMatrixSet:
    basis: SpinBasis
    W: GaussMatrix
    E: GaussMatrix
    C: GaussMatrix
    Pi: GaussMatrix
    K: GaussMatrix
    S: GaussMatrix
    F: GaussMatrix
    masks: dict  # element name -> generator-slot bitmask
    choice_e: str
    choice_pi: str
    rep_signs: dict  # element name -> +-1 vs increasing-index product

    def matrices(self) -> tuple[GaussMatrix, ...]:
        eye = GaussMatrix.identity(self.basis.dim)
        return (eye, self.W, self.E, self.C, self.Pi, self.K, self.S, self.F)

    def seven(self) -> tuple[GaussMatrix, ...]:
        return (self.W, self.E, self.C, self.Pi, self.K, self.S, self.F)


def _check(
    name: str,
    m: GaussMatrix,
    basis: SpinBasis,
    transform: Callable[[GaussMatrix], GaussMatrix],
    expect_sign: int,
) -> list[str]:
    inv = m.inverse()
    bad = []
    for i, g in enumerate(basis.gens, start=1):
        lhs = m * transform(g) * inv
        rhs = g if expect_sign > 0 else -g
        if lhs != rhs:
            bad.append(f"{name} condition fails on generator {i}")
    return bad


def check_W(m, basis):
    return _check("W", m, basis, lambda g: g, -1)


def check_E(m, basis):
    return _check("E", m, basis, lambda g: g.transpose(), +1)


def check_C(m, basis):
    return _check("C", m, basis, lambda g: g.transpose(), -1)


def check_Pi(m, basis):
    return _check("Pi", m, basis, lambda g: g.conj(), +1)


def check_K(m, basis):
    return _check("K", m, basis, lambda g: g.conj(), -1)


def check_S(m, basis):
    return _check("S", m, basis, lambda g: g.transpose().conj(), +1)


def check_F(m, basis):
    return _check("F", m, basis, lambda g: g.transpose().conj(), -1)


def build_W(basis: SpinBasis) -> GaussMatrix:
    """Product of all generators in index order."""
    full = (1 << basis.sig.n) - 1
    w = product_over(basis, full)
    bad = check_W(w, basis)
    if bad:
        raise ConditionError("; ".join(bad))
    return w


def find_E(basis: SpinBasis, prof: BasisProfile | None = None):
    """Both product candidates (all antisymmetric, all symmetric
    generators; empty product = I), filtered by the reversion condition.

    Returns a list of (matrix, choice, mask); for a certified pure basis
    exactly one candidate survives.
    """
    prof = prof or certify_spinbasis(basis)
    candidates = [
        (prof.skew_mask, SKEW_PRODUCT),
        (prof.sym_mask, SYM_PRODUCT),
    ]
    out = []
    seen = set()
    failures = []
    for mask, choice in candidates:
        m = product_over(basis, mask)
        bad = check_E(m, basis)
        if bad:
            failures.append(f"{choice}: {'; '.join(bad)}")
            continue
        if m in seen:
            continue
        seen.add(m)
        out.append((m, choice, mask))
    if not out:
        raise ConditionError("no valid reversion matrix: " + " | ".join(failures))
    return out


def build_C(e: GaussMatrix, w: GaussMatrix, basis: SpinBasis) -> GaussMatrix:
    """C = E * W^T; also verified to equal E * W up to sign."""
    c = e * w.transpose()
    bad = check_C(c, basis)
    if bad:
        raise ConditionError("; ".join(bad))
    ew = e * w
    if c != ew and c != -ew:
        raise ConditionError("E*W^T differs from E*W by more than a sign")
    return c


def find_Pi(basis: SpinBasis, prof: BasisProfile | None = None):
    """Candidates for the coefficient-conjugation matrix: the identity
    (all-real basis), the product of all imaginary-entry generators
    (kept when their count is even), and the product of all real-entry
    generators (kept when their count is odd); each candidate is
    validated against the defining condition."""
    prof = prof or certify_spinbasis(basis)
    candidates = []
    if prof.a == 0:
        candidates.append((0, IDENTITY))
    if prof.a % 2 == 0 and prof.a > 0:
        candidates.append((prof.complex_mask, COMPLEX_PRODUCT))
    if prof.b % 2 == 1:
        candidates.append((prof.real_mask, REAL_PRODUCT))
    out = []
    seen = set()
    failures = []
    for mask, choice in candidates:
        m = product_over(basis, mask)
        bad = check_Pi(m, basis)
        if bad:
            failures.append(f"{choice}: {'; '.join(bad)}")
            continue
        if m in seen:
            continue
        seen.add(m)
        out.append((m, choice, mask))
    if not out:
        raise ConditionError(
            "pseudoautomorphism not representable in this basis: " + " | ".join(failures)
        )
    return out


def build_K(pi: GaussMatrix, w: GaussMatrix, basis: SpinBasis) -> GaussMatrix:
    k = pi * w
    bad = check_K(k, basis)
    if bad:
        raise ConditionError("; ".join(bad))
    return k


def build_S(pi: GaussMatrix, e: GaussMatrix, basis: SpinBasis) -> GaussMatrix:
    s = pi * e
    bad = check_S(s, basis)
    if bad:
        raise ConditionError("; ".join(bad))
    return s


def build_F(pi: GaussMatrix, c: GaussMatrix, basis: SpinBasis, s: GaussMatrix, w: GaussMatrix) -> GaussMatrix:
    f = pi * c
    bad = check_F(f, basis)
    if bad:
        raise ConditionError("; ".join(bad))
    sw = s * w
    if f != sw and f != -sw:
        raise ConditionError("F = Pi*C differs from S*W by more than a sign")
    return f


def signature(aut: AutMatrixSet) -> SigTuple:
    """Signs of the squares of W, E, C, Pi, K, S, F; each square must be
    exactly +I or -I."""
    signs = []
    for name, m in zip(ELEMENT_NAMES[1:], aut.seven()):
        s = (m * m).pm_identity()
        if s is None:
            raise ConditionError(f"{name}^2 is not +-I; broken construction")
        signs.append(s)
    return tuple(signs)  # type: ignore[return-value]


def commutation_table(aut: AutMatrixSet) -> tuple[tuple[int, ...], ...]:
    """Sign eps with X*Y = eps * Y*X for each ordered pair of the eight
    elements (I first); every pair must commute or anticommute."""
    mats = aut.matrices()
    table = []
    for x in mats:
        row = []
        for y in mats:
            xy = x * y
            yx = y * x
            if xy == yx:
                row.append(1)
            elif xy == -yx:
                row.append(-1)
            else:
                raise ConditionError("a pair of automorphism matrices neither commutes nor anticommutes")
        table.append(tuple(row))
    return tuple(table)


def is_abelian(table: tuple[tuple[int, ...], ...]) -> bool:
    return all(s == 1 for row in table for s in row)


@dataclass(frozen=True)
class Realization:
    aut: AutMatrixSet
    signature: SigTuple
    commutation: tuple[tuple[int, ...], ...]

    @property
    def abelian(self) -> bool:
        return is_abelian(self.commutation)

    @property
    def signature_str(self) -> str:
        return sig_str(self.signature)


def _rep_sign(built: GaussMatrix, basis: SpinBasis, mask: int) -> int:
    rep = product_over(basis, mask)
    if built == rep:
        return 1
    if built == -rep:
        return -1
    raise ConditionError("built matrix is not a signed increasing-index generator product")


def complete_set(
    basis: SpinBasis,
    w: GaussMatrix,
    e: GaussMatrix,
    e_choice: str,
    e_mask: int,
    pi: GaussMatrix,
    pi_choice: str,
    pi_mask: int,
) -> AutMatrixSet:
    full = (1 << basis.sig.n) - 1
    c = build_C(e, w, basis)
    k = build_K(pi, w, basis)
    s = build_S(pi, e, basis)
    f = build_F(pi, c, basis, s, w)
    masks = {
        "W": full,
        "E": e_mask,
        "C": full ^ e_mask,
        "Pi": pi_mask,
        "K": pi_mask ^ full,
        "S": pi_mask ^ e_mask,
        "F": pi_mask ^ full ^ e_mask,
    }
    mats = {"W": w, "E": e, "C": c, "Pi": pi, "K": k, "S": s, "F": f}
    rep_signs = {name: _rep_sign(mats[name], basis, masks[name]) for name in mats}
    return AutMatrixSet(
        basis=basis,
        W=w,
        E=e,
        C=c,
        Pi=pi,
        K=k,
        S=s,
        F=f,
        masks=masks,
        choice_e=e_choice,
        choice_pi=pi_choice,
        rep_signs=rep_signs,
    )


def enumerate_realizations(basis: SpinBasis) -> list[Realization]:
    """Cartesian product of valid E and Pi choices, each completed to a
    full matrix set, deduplicated by (signature, commutation table)."""
    prof = certify_spinbasis(basis)
    w = build_W(basis)
    out = []
    seen = set()
    for e, e_choice, e_mask in find_E(basis, prof):
        for pi, pi_choice, pi_mask in find_Pi(basis, prof):
            aut = complete_set(basis, w, e, e_choice, e_mask, pi, pi_choice, pi_mask)
            sig = signature(aut)
            table = commutation_table(aut)
            key = (sig, table)
            if key in seen:
                continue
            seen.add(key)
            out.append(Realization(aut, sig, table))
    return out


def mask_label(mask: int, physics_indices: bool = False) -> str:
    """ASCII label for a generator product: e.g. "g13" (slots) or, with
    physics indexing (slot i -> index i-1, the gamma convention), "g02"."""
    idx = blade_indices(mask)
    if physics_indices:
        idx = [i - 1 for i in idx]
    if not idx:
        return "1"
    return "g" + "".join(str(i) for i in idx)
