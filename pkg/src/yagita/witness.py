"""Explicit finite matrix groups realizing the lower bounds.

Five families are constructed, each packaged with the data needed to check
it by machine: generators, the abstract order, a presentation (relator
words plus scalar commutation checks), whether every element is claimed to
have determinant 1, and the group's known Yagita invariant.

* ``G1(p, m)`` -- split metacyclic C_p : C_m with faithful action.  Over a
  ring containing zeta_p this is the m-dimensional monomial model
  (diagonal of zeta_p powers plus a cyclic shift); over Z it is the action
  of zeta_p-multiplication and the Galois group on the power basis of
  Z[zeta_p], in dimension p - 1.
* ``G2(p, m)`` -- split metacyclic C_p : C_2m acting through C_m, realized
  inside SL by twisting the order-m generator with a root of -1.
* ``E(p, m)`` -- extraspecial group of order p^(2m+1) and exponent p
  (p odd): tensor products of the p-cycle and the diagonal of zeta_p
  powers, one slot per central factor; plus restriction of scalars to Z
  (``blow_up``), replacing each entry by its multiplication matrix on the
  power basis of Z[zeta_p].
* ``E(2, m)`` -- over Z: the dihedral group of order 8 for m = 1 ("D8"),
  and for m >= 2 tensor products of the 2x2 swap and sign blocks, with the
  defining checks (order, center, determinants) verified rather than
  trusted.
* ``Q8`` -- the quaternion group in SL_2(Z[i]).

Constructions only exist where an explicit basis for the coefficient ring
action is available: rings containing zeta_p, and Z.  Everything else
raises ``WitnessError`` instead of guessing.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, replace

from .cyclo import CycNum, zeta
from .exactmat import (
    DEFAULT_CAP,
    MAX_MATRIX_SIZE,
    CycMatrix,
    Word,
    block_diag,
    closure,
    det,
    identity,
    kron,
    relations_check,
)
from .formulas import oracle_yagita
from .numutil import divisors, is_prime, multiplicative_order
from .ringspec import (
    Cyclotomic,
    AbstractRing,
    RationalIntegers,
    RingSpec,
    UnsupportedFieldError,
    compute_l,
    has_nth_root_of_minus_one,
    is_rational_integers,
    roots_of_unity_order,
)


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class WitnessKind:
    family: str  # "G1" | "G2" | "E" | "Q8" | "D8"
    p: int = 0
    m: int = 0

    def __str__(self) -> str:
        if self.family in ("Q8", "D8"):
            return self.family
        return f"{self.family}({self.p},{self.m})"


def parse_kind(text: str) -> WitnessKind:
    t = text.strip().lower()
    if t == "q8":
        return WitnessKind("Q8")
    if t == "d8":
        return WitnessKind("D8")
    parts = t.split(":")
    if len(parts) == 3 and parts[0] in ("g1", "g2", "e"):
        return WitnessKind(parts[0].upper() if parts[0] != "e" else "E",
                           int(parts[1]), int(parts[2]))
    raise WitnessError(f"cannot parse witness kind {text!r}")


@dataclass(frozen=True)
class WitnessEmbedding:
    kind: WitnessKind
    ring: RingSpec
    dimension: int
    generators: tuple[CycMatrix, ...]
    expected_order: int
    expected_yagita: int
    claims_sl: bool
    relators: tuple[Word, ...]
    # (i, j, S): require gens[i] @ gens[j] == S @ gens[j] @ gens[i]
    central_commutations: tuple[tuple[int, int, CycMatrix], ...] = ()
    expected_center: int = 1
    padded: bool = False

    def __str__(self) -> str:
        pad = "+pad" if self.padded else ""
        return f"{self.kind}{pad} in dim {self.dimension} over {self.ring}"


# ---------------------------------------------------------------------------
# building blocks


def regular_rep_zeta(p: int) -> CycMatrix:
    """Multiplication by zeta_p on the power basis of Z[zeta_p]: the
    (p-1) x (p-1) integer companion matrix of the p-th cyclotomic
    polynomial (last column all -1)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = p - 1
    rows = [[0] * n for _ in range(n)]
    for j in range(n - 1):
        rows[j + 1][j] = 1
    for i in range(n):
        rows[i][n - 1] = -1
    return CycMatrix(rows)


def galois_rep(p: int, g: int) -> CycMatrix:
    """The Galois automorphism zeta -> zeta**g on the power basis of
    Z[zeta_p], as an integer matrix (exponents p-1 fold back via the
    relation 1 + zeta + ... + zeta^(p-1) = 0)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    g %= p
    if math.gcd(g, p) != 1:
        raise ValueError(f"{g} is not a unit mod {p}")
    n = p - 1
    rows = [[0] * n for _ in range(n)]
    for j in range(n):
        e = g * j % p
        if e < n:
            rows[e][j] = 1
        else:
            for i in range(n):
                rows[i][j] = -1
    return CycMatrix(rows)


def _least_unit_of_order(p: int, m: int) -> int:
    for g in range(1, p):
        if multiplicative_order(g, p) == m:
            return g
    raise WitnessError(f"no unit of order {m} mod {p}")


def _shift_matrix(n: int) -> CycMatrix:
    """Cyclic shift e_j -> e_(j-1 mod n) (an n-cycle, determinant (-1)^(n-1))."""
    rows = [[0] * n for _ in range(n)]
    for j in range(n):
        rows[(j - 1) % n][j] = 1
    return CycMatrix(rows)


def _up_shift_matrix(n: int) -> CycMatrix:
    """Cyclic shift e_j -> e_(j+1 mod n)."""
    rows = [[0] * n for _ in range(n)]
    for j in range(n):
        rows[(j + 1) % n][j] = 1
    return CycMatrix(rows)


def _commutator_word(a: int, b: int) -> Word:
    return ((a, 1), (b, 1), (a, -1), (b, -1))


# ---------------------------------------------------------------------------
# metacyclic witnesses


@functools.lru_cache(maxsize=None)
def build_g1(p: int, m: int, ring: RingSpec) -> WitnessEmbedding:
    """The split metacyclic group C_p : C_m inside GL over the given ring.

    Dimension lcm(m, l) where l = [F(zeta_p) : F]; supported over rings
    containing zeta_p (monomial model) and over Z (Galois model).
    """
    if not is_prime(p) or p == 2:
        raise WitnessError("need an odd prime p")
    if m < 2 or (p - 1) % m != 0:
        raise WitnessError(f"m = {m} must divide p - 1 = {p - 1} and exceed 1")
    l = compute_l(ring, p)
    dim = m * l // math.gcd(m, l)
    if dim > MAX_MATRIX_SIZE:
        raise WitnessError(f"dimension {dim} exceeds the matrix-size cap")
    g = _least_unit_of_order(p, m)
    if is_rational_integers(ring):
        a = regular_rep_zeta(p)
        b = galois_rep(p, g)
    elif l == 1 and not isinstance(ring, AbstractRing):
        # monomial model: conjugation by the shift cycles the diagonal
        # exponents through g^0, g^1, ..., g^(m-1)
        a = CycMatrix.diagonal([zeta(p, pow(g, i, p)) for i in range(m)])
        b = _shift_matrix(m)
    else:
        raise UnsupportedFieldError(
            f"no integral model over {ring} (l = {l}); supported: Z and rings "
            "containing zeta_p"
        )
    kind = WitnessKind("G1", p, m)
    relators: tuple[Word, ...] = (
        (((0, p),)),
        (((1, m),)),
        ((1, 1), (0, 1), (1, -1), (0, -g)),
    )
    claims_sl = det(a) == 1 and det(b) == 1
    return WitnessEmbedding(
        kind=kind,
        ring=ring,
        dimension=dim,
        generators=(a, b),
        expected_order=p * m,
        expected_yagita=oracle_yagita(kind),
        claims_sl=claims_sl,
        relators=relators,
        expected_center=1,
    )


@functools.lru_cache(maxsize=None)
def build_g2(p: int, m: int, ring: RingSpec) -> WitnessEmbedding:
    """C_p : C_2m (acting through C_m) inside SL: twist the order-m
    generator B (determinant -1) by a root of unity mu with mu**n = -1."""
    if m % 2:
        raise WitnessError("the order-2m extension needs m even")
    base = build_g1(p, m, ring)
    a, b = base.generators
    n = base.dimension
    if not has_nth_root_of_minus_one(ring, n):
        raise WitnessError(f"{ring} has no {n}-th root of -1")
    if det(b) != -1:
        raise WitnessError(
            "order-m generator has determinant +1; the root-of-unity twist "
            "only lands in SL when it is -1"
        )
    big = roots_of_unity_order(ring)
    g0 = math.gcd(n, big)
    half = big // 2
    t = (half // g0) * pow(n // g0, -1, big // g0) % (big // g0)
    mu = zeta(big, t)
    if mu**m != CycNum.rational(-1):
        raise WitnessError("chosen root of -1 does not certify order 2m")
    c = mu * b
    g = _least_unit_of_order(p, m)
    kind = WitnessKind("G2", p, m)
    relators: tuple[Word, ...] = (
        (((0, p),)),
        (((1, 2 * m),)),
        ((1, 1), (0, 1), (1, -1), (0, -g)),
    )
    return WitnessEmbedding(
        kind=kind,
        ring=ring,
        dimension=n,
        generators=(a, c),
        expected_order=2 * p * m,
        expected_yagita=oracle_yagita(kind),
        claims_sl=True,
        relators=relators,
        expected_center=2,
    )


def sl_pad(w: WitnessEmbedding) -> WitnessEmbedding:
    """Append the determinant as an extra diagonal entry: g -> diag(g, det g).

    Requires every generator determinant in {1, -1}; the result lands in SL
    of one dimension higher, with the closure order unchanged (the first
    block already separates elements).
    """
    dets = [det(g) for g in w.generators]
    for d in dets:
        if d != 1 and d != -1:
            raise WitnessError("generator determinant outside {1, -1}")
    new_gens = tuple(
        block_diag(g, CycMatrix([[d]])) for g, d in zip(w.generators, dets)
    )
    new_central = tuple(
        (i, j, block_diag(s, CycMatrix([[det(s)]])))
        for i, j, s in w.central_commutations
    )
    return replace(
        w,
        dimension=w.dimension + 1,
        generators=new_gens,
        claims_sl=True,
        central_commutations=new_central,
        padded=True,
    )


# ---------------------------------------------------------------------------
# extraspecial witnesses


@functools.lru_cache(maxsize=None)
def build_extraspecial_monomial(p: int, m: int) -> WitnessEmbedding:
    """The extraspecial group of order p^(2m+1) and exponent p (p odd) in
    its p^m-dimensional monomial representation over Z[zeta_p].

    Slot i carries X_i (p-cycle) and Z_i (diagonal of zeta_p powers);
    Z_i X_i = zeta_p X_i Z_i within a slot and everything else commutes.
    """
    if not is_prime(p) or p == 2:
        raise WitnessError("need an odd prime p")
    if m < 1 or p**m > MAX_MATRIX_SIZE:
        raise WitnessError(f"p^m = {p**m} exceeds the matrix-size cap")
    shift = _up_shift_matrix(p)
    diag = CycMatrix.diagonal([zeta(p, i) for i in range(p)])
    eye = identity(p, p)

    def at_slot(block: CycMatrix, slot: int) -> CycMatrix:
        out = block if slot == 0 else eye
        for i in range(1, m):
            out = kron(out, block if slot == i else eye)
        return out

    xs = [at_slot(shift, i) for i in range(m)]
    zs = [at_slot(diag, i) for i in range(m)]
    gens = tuple(xs + zs)
    relators: list[Word] = []
    for i in range(2 * m):
        relators.append(((i, p),))
    for i in range(m):
        for j in range(i + 1, m):
            relators.append(_commutator_word(i, j))  # X_i with X_j
            relators.append(_commutator_word(m + i, m + j))  # Z_i with Z_j
    for i in range(m):
        for j in range(m):
            if i != j:
                relators.append(_commutator_word(i, m + j))  # X_i with Z_j
    scalar = zeta(p, 1) * identity(p**m, p)
    central = tuple((m + i, i, scalar) for i in range(m))
    kind = WitnessKind("E", p, m)
    return WitnessEmbedding(
        kind=kind,
        ring=Cyclotomic(p),
        dimension=p**m,
        generators=gens,
        expected_order=p ** (2 * m + 1),
        expected_yagita=oracle_yagita(kind),
        claims_sl=True,
        relators=tuple(relators),
        central_commutations=central,
        expected_center=p,
    )


def blow_up_matrix(mat: CycMatrix, p: int) -> CycMatrix:
    """Restriction of scalars for one matrix over Z[zeta_p]: each entry
    a = sum c_k zeta^k becomes the integer block sum c_k R^k, with R the
    multiplication-by-zeta matrix.  The entry map is a ring homomorphism,
    so this commutes with matrix products."""
    if not is_prime(p):
        raise WitnessError(f"conductor {p} is not prime")
    reg = regular_rep_zeta(p)
    powers = [identity(p - 1)]
    for _ in range(p - 2):
        powers.append(powers[-1] * reg)
    zero = CycNum.rational(0)

    def entry_block(x: CycNum) -> list[list[CycNum]]:
        if x.den != 1:
            raise WitnessError(
                "non-integral entry; restriction of scalars needs Z[zeta_p] entries"
            )
        grid = [[zero] * (p - 1) for _ in range(p - 1)]
        for k, c in enumerate(x.num):
            if c:
                blk = powers[k]
                for i in range(p - 1):
                    for j in range(p - 1):
                        grid[i][j] = grid[i][j] + c * blk.rows[i][j]
        return grid

    mat = mat.embed(p) if mat.conductor != p else mat
    n = mat.size
    big = [[None] * (n * (p - 1)) for _ in range(n * (p - 1))]
    for i in range(n):
        for j in range(n):
            blk = entry_block(mat.rows[i][j])
            for bi in range(p - 1):
                for bj in range(p - 1):
                    big[i * (p - 1) + bi][j * (p - 1) + bj] = blk[bi][bj]
    return CycMatrix(big)


def blow_up(w: WitnessEmbedding) -> WitnessEmbedding:
    """Restriction of scalars of a whole embedding from Z[zeta_p] to Z,
    giving the induced integral form of dimension (p-1) * n."""
    p = 1
    for g in w.generators:
        p = math.lcm(p, g.conductor)
    if p == 1:
        raise WitnessError("entries are already rational integers")
    if (p - 1) * w.dimension > MAX_MATRIX_SIZE:
        raise WitnessError("blown-up dimension exceeds the matrix-size cap")
    new_gens = tuple(blow_up_matrix(g, p) for g in w.generators)
    new_central = tuple(
        (i, j, blow_up_matrix(s, p)) for i, j, s in w.central_commutations
    )
    return replace(
        w,
        ring=RationalIntegers(),
        dimension=(p - 1) * w.dimension,
        generators=new_gens,
        central_commutations=new_central,
        claims_sl=True,
    )


@functools.lru_cache(maxsize=None)
def build_e2m_integer(m: int) -> WitnessEmbedding:
    """The extraspecial 2-group of order 2^(2m+1) (central product of m
    dihedral groups of order 8) over Z.

    m = 1 is the dihedral group of order 8 itself in GL_2(Z) (one generator
    has determinant -1; ``sl_pad`` gives the SL_3 form).  For m >= 2 the
    generators are tensor products of the swap S and sign D blocks; the
    defining facts (closure order, center {+-I}, all determinants 1) are
    verified at construction time for the desk-scale sizes instead of being
    trusted.
    """
    if m < 1 or 2**m > MAX_MATRIX_SIZE:
        raise WitnessError(f"2^m = {2**m} exceeds the matrix-size cap")
    if m == 1:
        j = CycMatrix([[0, -1], [1, 0]])
        d = CycMatrix([[1, 0], [0, -1]])
        kind = WitnessKind("D8", 2, 1)
        return WitnessEmbedding(
            kind=kind,
            ring=RationalIntegers(),
            dimension=2,
            generators=(j, d),
            expected_order=8,
            expected_yagita=oracle_yagita(kind),
            claims_sl=False,
            relators=(((0, 4),), ((1, 2),), ((1, 1), (0, 1), (1, -1), (0, 1))),
            expected_center=2,
        )
    swap = CycMatrix([[0, 1], [1, 0]])
    sign = CycMatrix([[1, 0], [0, -1]])
    eye = identity(2)

    def at_slot(block: CycMatrix, slot: int) -> CycMatrix:
        out = block if slot == 0 else eye
        for i in range(1, m):
            out = kron(out, block if slot == i else eye)
        return out

    xs = [at_slot(swap, i) for i in range(m)]
    zs = [at_slot(sign, i) for i in range(m)]
    gens = tuple(xs + zs)
    relators: list[Word] = []
    for i in range(2 * m):
        relators.append(((i, 2),))
    for i in range(m):
        for j in range(i + 1, m):
            relators.append(_commutator_word(i, j))
            relators.append(_commutator_word(m + i, m + j))
    for i in range(m):
        for j in range(m):
            if i != j:
                relators.append(_commutator_word(i, m + j))
    minus_eye = -1 * identity(2**m)
    central = tuple((m + i, i, minus_eye) for i in range(m))
    kind = WitnessKind("E", 2, m)
    w = WitnessEmbedding(
        kind=kind,
        ring=RationalIntegers(),
        dimension=2**m,
        generators=gens,
        expected_order=2 ** (2 * m + 1),
        expected_yagita=oracle_yagita(kind),
        claims_sl=True,
        relators=tuple(relators),
        central_commutations=central,
        expected_center=2,
    )
    if m <= 3:  # construction-time check at desk scale; larger sizes are
        # verified on demand by verify_embedding
        vw = verify_embedding(w)
        if not vw.ok:
            raise WitnessError(f"generator recipe failed verification: {vw}")
    return w


@functools.lru_cache(maxsize=None)
def build_q8() -> WitnessEmbedding:
    """The quaternion group of order 8 in SL_2(Z[i]): the left action of the
    quaternion units on Z[i] + Z[i]j."""
    i4 = zeta(4)
    a = CycMatrix([[i4, 0], [0, -i4]])
    b = CycMatrix([[0, -1], [1, 0]])
    kind = WitnessKind("Q8", 2, 1)
    return WitnessEmbedding(
        kind=kind,
        ring=Cyclotomic(4),
        dimension=2,
        generators=(a, b),
        expected_order=8,
        expected_yagita=oracle_yagita(kind),
        claims_sl=True,
        relators=(
            ((0, 4),),
            ((0, 2), (1, -2)),
            ((1, 1), (0, 1), (1, -1), (0, 1)),
        ),
        expected_center=2,
    )


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class VerifiedWitness:
    embedding: WitnessEmbedding
    order: int
    order_ok: bool
    relations_ok: bool
    central_ok: bool
    sl_ok: bool
    center_ok: bool
    elements: tuple[CycMatrix, ...]

    @property
    def ok(self) -> bool:
        return (
            self.order_ok
            and self.relations_ok
            and self.central_ok
            and self.sl_ok
            and self.center_ok
        )

    def summary(self) -> dict:
        return {
            "witness": str(self.embedding.kind),
            "dimension": self.embedding.dimension,
            "order": self.order,
            "expected_order": self.embedding.expected_order,
            "order_ok": self.order_ok,
            "relations_ok": self.relations_ok,
            "central_ok": self.central_ok,
            "sl_ok": self.sl_ok,
            "center_ok": self.center_ok,
            "verified": self.ok,
        }


def verify_embedding(w: WitnessEmbedding, cap: int = DEFAULT_CAP) -> VerifiedWitness:
    """Machine-check an embedding: enumerate the group, confirm its order,
    its presentation, the determinant claim, and the center size.

    Order equality plus the presentation checks pin the group: the matrices
    satisfy all relations of the abstract group, so they generate a
    quotient of it, and matching orders force an isomorphism (faithfulness).
    """
    elems = closure(w.generators, cap)
    order_ok = len(elems) == w.expected_order
    relations_ok = relations_check(w.generators, w.relators, cap)
    central_ok = all(
        w.generators[i] * w.generators[j] == s * (w.generators[j] * w.generators[i])
        for i, j, s in w.central_commutations
    )
    sl_ok = (not w.claims_sl) or all(det(x) == 1 for x in elems)
    center = sum(1 for x in elems if all(g * x == x * g for g in w.generators))
    center_ok = center == w.expected_center
    return VerifiedWitness(
        embedding=w,
        order=len(elems),
        order_ok=order_ok,
        relations_ok=relations_ok,
        central_ok=central_ok,
        sl_ok=sl_ok,
        center_ok=center_ok,
        elements=tuple(elems),
    )


@functools.lru_cache(maxsize=None)
def _extraspecial_over_Z(p: int, m: int) -> WitnessEmbedding:
    return blow_up(build_extraspecial_monomial(p, m))


# ---------------------------------------------------------------------------
# the menu: which witnesses fit inside GL_n / SL_n over a given ring


@dataclass(frozen=True)
class MenuEntry:
    embedding: WitnessEmbedding
    in_gl: bool
    in_sl: bool


def witness_menu(p: int, n: int, ring: RingSpec) -> list[MenuEntry]:
    """All constructible witnesses fitting in dimension n over the ring.

    A witness of dimension d <= n sits inside GL_n by padding with the
    identity; the SL flag additionally requires determinant 1 (directly,
    via a root-of-unity twist, or via the determinant pad into dimension
    d + 1).  The list may be empty: over rings with 1 < l < p - 1 no
    integral model is available here.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    entries: list[MenuEntry] = []
    if isinstance(ring, AbstractRing):
        return entries
    if p == 2:
        m = 1
        while 2**m <= min(n, MAX_MATRIX_SIZE):
            w = build_e2m_integer(m)
            entries.append(MenuEntry(w, True, w.claims_sl))
            if not w.claims_sl and w.dimension + 1 <= n:
                entries.append(MenuEntry(sl_pad(w), False, True))
            m += 1
        if n >= 2 and roots_of_unity_order(ring) % 4 == 0:
            entries.append(MenuEntry(build_q8(), True, True))
    else:
        try:
            l = compute_l(ring, p)
        except UnsupportedFieldError:
            return entries
        buildable = is_rational_integers(ring) or l == 1
        if not buildable:
            return entries
        for m in divisors(p - 1):
            if m < 2:
                continue
            dim = m * l // math.gcd(m, l)
            if dim > min(n, MAX_MATRIX_SIZE):
                continue
            w = build_g1(p, m, ring)
            entries.append(MenuEntry(w, True, w.claims_sl))
            if not w.claims_sl and w.dimension + 1 <= min(n, MAX_MATRIX_SIZE):
                entries.append(MenuEntry(sl_pad(w), False, True))
            if m % 2 == 0:
                try:
                    entries.append(MenuEntry(build_g2(p, m, ring), True, True))
                except WitnessError:
                    pass
        scale = (p - 1) if is_rational_integers(ring) else 1
        q = 1
        while p**q <= MAX_MATRIX_SIZE and scale * p**q <= min(n, MAX_MATRIX_SIZE):
            if is_rational_integers(ring):
                w = _extraspecial_over_Z(p, q)
            else:
                w = build_extraspecial_monomial(p, q)
            entries.append(MenuEntry(w, True, True))
            q += 1
    entries.sort(
        key=lambda e: (str(e.embedding.kind), e.embedding.padded, e.embedding.dimension)
    )
    return entries
