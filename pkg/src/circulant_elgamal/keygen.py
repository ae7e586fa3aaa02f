"""Parameter generation and the five-condition validator.

A good public matrix A over GF(2^n) must satisfy: determinant 1,
row-sum 1, d prime, chi_A/(x-1) irreducible, and 2^n primitive mod d.
Together these make the circulant DLP as hard as the DLP of the field
with 2^{n(d-1)} elements and no easier. The generator below constructs
such matrices from a random primitive polynomial tau: it CRT-combines
psi = 1 mod (x-1), psi = tau mod Phi, and raises circ(psi) to the order
of tau's constant term in the base field, which forces determinant 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from . import fileio
from .circulant import (
    Circulant,
    CrtPair,
    PhiReducible,
    char_poly_quotient,
    crt_join,
    det,
    phi_extension,
    power,
    row_sum,
)
from .gf2field import (
    FieldSpec,
    Poly,
    field_make,
    field_order,
    poly_is_irreducible,
    primitive_poly,
)
from .numtheory import (
    DEFAULT_BUDGET,
    DNotPrime,
    NotAUnit,
    factor,
    is_prime,
    is_primitive_mod,
)

MAX_ATTEMPTS = 32


class NotPrimitive(ValueError):
    pass


class RetriesExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class ConditionReport:
    det_one: bool
    row_sum_one: bool
    d_prime: bool
    quotient_irreducible: bool
    q_primitive: bool

    @property
    def all(self) -> bool:
        return (
            self.det_one
            and self.row_sum_one
            and self.d_prime
            and self.quotient_irreducible
            and self.q_primitive
        )

    def lines(self) -> list[tuple[str, bool]]:
        return [
            ("det_one", self.det_one),
            ("row_sum_one", self.row_sum_one),
            ("d_prime", self.d_prime),
            ("quotient_irreducible", self.quotient_irreducible),
            ("q_primitive", self.q_primitive),
        ]


class OrderInfo(NamedTuple):
    order: int  # exact order, or a certified divisor of it
    exact: bool


@dataclass(frozen=True)
class ParamSet:
    spec: FieldSpec
    d: int
    A: Circulant
    tau: Poly | None = None
    det_order: int | None = None
    order_info: OrderInfo | None = None

    @property
    def n(self) -> int:
        return self.spec.n

    def exponent_bound(self) -> int:
        """Exclusive upper bound for secret exponents.

        The exact group order when known, else the 2^{n(d-1)} surrogate
        (the order divides 2^{n(d-1)} - 1, so the surrogate only skews
        the distribution, never correctness).
        """
        if self.order_info is not None and self.order_info.exact:
            return self.order_info.order
        return 1 << (self.spec.n * (self.d - 1))


def _q_primitive(n: int, d: int) -> bool:
    try:
        return is_primitive_mod(1 << n, d)
    except (DNotPrime, NotAUnit):
        return False


def _char_poly_dense(rows: list[list[int]], spec: FieldSpec) -> Poly:
    """Characteristic polynomial det(xI - M) by the Berkowitz iteration.

    Division-free, so it works over any F_q including GF(2); signs
    vanish in characteristic 2. Coefficient vectors are kept highest
    degree first.
    """
    n = len(rows)
    fmul = spec.mul
    c = [1]
    for r in range(1, n + 1):
        rv = rows[r - 1][: r - 1]
        sv = [rows[i][r - 1] for i in range(r - 1)]
        col = [1, rows[r - 1][r - 1]]
        v = sv[:]
        for k in range(r - 1):
            acc = 0
            for x, y in zip(rv, v):
                if x and y:
                    acc ^= fmul(x, y)
            col.append(acc)
            if k < r - 2:
                # v <- leading (r-1) x (r-1) block times v
                nv = [0] * (r - 1)
                for i in range(r - 1):
                    acc = 0
                    ri = rows[i]
                    for j in range(r - 1):
                        if ri[j] and v[j]:
                            acc ^= fmul(ri[j], v[j])
                    nv[i] = acc
                v = nv
        newc = [0] * (r + 1)
        for i in range(r + 1):
            acc = 0
            lo = max(0, i - (len(col) - 1))
            for j in range(lo, min(i, r - 1) + 1):
                t = col[i - j]
                cj = c[j]
                if t and cj:
                    acc ^= cj if t == 1 else fmul(t, cj)
            newc[i] = acc
        c = newc
    return Poly.make(spec, list(reversed(c)))


_FALLBACK_MAX_D = 13


def _quotient_condition(a: Circulant) -> bool:
    """Is chi_A/(x-1) irreducible?

    Primitive case: Phi is irreducible, so the quotient is the product
    of the d-1 Frobenius conjugates of the beta component and it is
    irreducible exactly when they are pairwise distinct. Otherwise, at
    d <= 13, compute the characteristic polynomial outright and factor.
    Beyond that bound the answer is False on structural grounds: for
    odd d with Phi reducible the quotient splits across at least two
    CRT blocks, and for even d (where x^d - 1 = (x^{d/2} - 1)^2) the
    characteristic polynomial is a perfect square, which leaves an
    irreducible quotient possible only at d = 2.
    """
    d, spec = a.d, a.spec
    if d >= 3 and _q_primitive(spec.n, d):
        return char_poly_quotient(a)[1]
    if d > _FALLBACK_MAX_D:
        return False
    av = a.bits()
    rows = [[av[(j - k) % d] for j in range(d)] for k in range(d)]
    chi = _char_poly_dense(rows, spec)
    x_minus_1 = Poly.make(spec, [1, 1])
    quotient, rem = divmod(chi, x_minus_1)
    if not rem.is_zero():
        return False  # 1 is not an eigenvalue, the quotient is undefined
    return poly_is_irreducible(quotient)


def five_conditions(a: Circulant) -> ConditionReport:
    """Evaluate the five security conditions; reports, never raises."""
    return ConditionReport(
        det_one=det(a).bits == 1,
        row_sum_one=row_sum(a).bits == 1,
        d_prime=is_prime(a.d),
        quotient_irreducible=_quotient_condition(a),
        q_primitive=_q_primitive(a.spec.n, a.d),
    )


def order_of(a: Circulant, budget: int = DEFAULT_BUDGET) -> OrderInfo:
    """Multiplicative order of an invertible circulant.

    Works from the factorization of N = q^{d-1} - 1, a multiple of the
    order whenever Phi is irreducible. If the budget cannot finish the
    factorization, the result is the product of the prime powers whose
    exact contribution to the order could be certified, a divisor of
    the true order, flagged exact=False.
    """
    spec, d = a.spec, a.d
    n_exp = 1 << (spec.n * (d - 1))
    big_n = n_exp - 1
    fact = factor(big_n, budget)
    if not power(a, big_n).is_identity():
        raise ArithmeticError(
            "order does not divide q^(d-1) - 1; the matrix is outside the "
            "group these parameters assume"
        )
    if fact.complete:
        t = big_n
        for p, e in fact.factors.items():
            for _ in range(e):
                if t % p == 0 and power(a, t // p).is_identity():
                    t //= p
                else:
                    break
        return OrderInfo(t, True)
    certified = 1
    for p, e in sorted(fact.factors.items()):
        if fact.cofactor % p == 0:
            # more copies of p may hide in the cofactor, valuation unknown
            continue
        k = 0
        while k < e and power(a, big_n // p ** (k + 1)).is_identity():
            k += 1
        certified *= p ** (e - k)
    return OrderInfo(certified, False)


def generate(
    n: int,
    d: int,
    seed: int | random.Random | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ParamSet:
    """Construct a matrix passing all five conditions at (2^n, d).

    Draw a primitive tau of degree d-1; det_order is the order of
    tau(0), the determinant of tau's companion matrix, in the base
    field; psi is the CRT combination of 1 mod (x-1) and tau mod Phi;
    A = circ(psi)^det_order. The result is re-validated and, when the
    group order is exactly computable, required to reach q^{d-3};
    failures draw a fresh tau, up to MAX_ATTEMPTS times.
    """
    try:
        if not is_primitive_mod(1 << n, d):
            raise NotPrimitive(f"2^{n} is not primitive mod {d}")
    except (DNotPrime, NotAUnit) as exc:
        raise NotPrimitive(f"bad d={d}: {exc}") from None
    if d % 2 == 0 or d < 3:
        raise NotPrimitive(f"d must be an odd prime >= 3, got {d}")
    spec = field_make(n)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    q = 1 << n
    qm1 = factor(q - 1, budget)
    order_floor = q ** (d - 3)
    ext = phi_extension(spec, d)
    for _ in range(MAX_ATTEMPTS):
        tau = primitive_poly(d - 1, spec, rng, budget).poly
        tau0 = tau.coeffs[0]
        if q == 2:
            det_order = 1
        elif qm1.complete:
            det_order = field_order(spec, tau0, qm1)
        else:
            # q - 1 is always a multiple of the true order; using it
            # keeps det(A) = 1 without the exact factorization
            det_order = q - 1
        psi = crt_join(CrtPair(spec.one, tau % ext.modulus, ext))
        a = power(psi, det_order)
        if not five_conditions(a).all:
            continue
        info = order_of(a, budget)
        if info.exact and info.order < order_floor:
            continue
        return ParamSet(spec, d, a, tau, det_order, info)
    raise RetriesExhausted(
        f"no matrix passed validation in {MAX_ATTEMPTS} draws at (2^{n}, {d})"
    )


# ---------------------------------------------------------------------------
# parameter files

def save_params(params: ParamSet, path) -> None:
    fileio.write_kv(
        path,
        [
            ("version", "1"),
            ("n", str(params.spec.n)),
            ("d", str(params.d)),
            ("field_poly", format(params.spec.modulus, "#x")),
            ("A", params.A.to_hex()),
        ],
    )


def load_params(path) -> ParamSet:
    r = fileio.KvReader(path)
    fileio.check_version(r)
    n = r.expect_int("n")
    d = r.expect_int("d")
    modulus = r.expect_int("field_poly")
    a_text = r.expect("A")
    r.done()
    try:
        spec = FieldSpec(n, modulus)
    except ValueError as exc:
        raise fileio.FileFormatError(f"{path}: {exc}") from None
    a = Circulant.from_hex(spec, a_text)
    if a.d != d:
        raise fileio.FileFormatError(
            f"{path}: A has {a.d} entries, expected d = {d}"
        )
    return ParamSet(spec, d, a)
