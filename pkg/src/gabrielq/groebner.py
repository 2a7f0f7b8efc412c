"""Buchberger engine and derived ideal operations.

Everything downstream (dimension, filters, saturation, transforms) compiles
to the operations in this module: reduced Groebner bases, membership,
sum/product/intersection, quotients, saturation, and elimination.
"""
from __future__ import annotations

import heapq
from fractions import Fraction

from .poly import (
    DEGREVLEX,
    MonomialOrder,
    Polynomial,
    elimination_order,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


def normal_form(f: Polynomial, G, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Canonical remainder of f under division by G (tail-reduced).

    f - normal_form(f, G) lies in <G>, and no monomial of the result is
    divisible by any leading monomial of G.
    """
    reducers = []
    for g in G:
        if g.is_zero:
            continue
        lt, lc = g.leading(order)
        reducers.append((lt, lc, [(m, c) for m, c in g.terms.items() if m != lt]))
    if not reducers:
        return f
    key = order.key
    work = dict(f.terms)
    remainder: dict = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lt, lc, tail in reducers:
            if mono_divides(lt, m):
                shift = mono_div(m, lt)
                factor = c / lc
                for gm, gc in tail:
                    t = mono_mul(gm, shift)
                    s = work.get(t, 0) - factor * gc
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[m] = c
    return Polynomial(f.vars, remainder)


def _normal_form_scaled(f: Polynomial, G, order: MonomialOrder) -> Polynomial:
    """Scalar multiple of normal_form(f, G, order), via fraction-free
    pseudo-reduction over the integers.

    Inside Buchberger only the remainder up to a nonzero scalar matters
    (the result is made monic or primitive afterwards), so the whole
    computation runs on integer coefficients: when the leading coefficient
    L of a reducer does not divide the working coefficient c, everything
    is multiplied by L/gcd(c, L) first.  Rational arithmetic here is what
    makes naive Buchberger crawl on dense inputs.

    The working polynomial keeps its monomials in a lazy max-heap (stale
    entries skipped on pop) so each step costs O(log n) rather than a full
    scan, with order keys cached per monomial across calls.
    """
    from math import gcd
    reducers = []
    for g in G:
        if g.is_zero:
            continue
        g = _primitive(g)
        lt, lc = g.leading(order)
        reducers.append(
            (lt, int(lc),
             [(m, int(c)) for m, c in g.terms.items() if m != lt])
        )
    if not reducers:
        return f
    f = _primitive(f)
    negkey = _negkey_cache(order)
    work = {m: int(c) for m, c in f.terms.items()}
    heap = [(negkey(m), m) for m in work]
    heapq.heapify(heap)
    remainder: dict = {}
    steps = 0
    while heap:
        m = heapq.heappop(heap)[1]
        if m not in work:
            continue
        c = work.pop(m)
        for lt, lc, tail in reducers:
            if mono_divides(lt, m):
                shift = mono_div(m, lt)
                d = gcd(c, lc)
                mult = lc // d
                q = c // d
                if mult != 1:
                    work = {k: v * mult for k, v in work.items()}
                    remainder = {k: v * mult for k, v in remainder.items()}
                for gm, gc in tail:
                    t = mono_mul(gm, shift)
                    old = work.get(t, 0)
                    s = old - q * gc
                    if s:
                        work[t] = s
                        if old == 0:
                            heapq.heappush(heap, (negkey(t), t))
                    else:
                        work.pop(t, None)
                steps += 1
                if steps % 8 == 0 and work:
                    shrink = 0
                    for v in work.values():
                        shrink = gcd(shrink, v)
                    for v in remainder.values():
                        shrink = gcd(shrink, v)
                    if shrink > 1:
                        work = {k: v // shrink for k, v in work.items()}
                        remainder = {
                            k: v // shrink for k, v in remainder.items()
                        }
                break
        else:
            remainder[m] = c
    return Polynomial(f.vars, {m: Fraction(c) for m, c in remainder.items()})


def _neg_tuple(k):
    if isinstance(k, tuple):
        return tuple(_neg_tuple(e) for e in k)
    return -k


_NEGKEY_CACHES: dict = {}


def _negkey_cache(order: MonomialOrder):
    """Memoized negated order key: heapq is a min-heap, so the maximum
    monomial is the one whose elementwise-negated key is smallest."""
    cache = _NEGKEY_CACHES.get(order)
    if cache is None:
        cache = _NEGKEY_CACHES[order] = {}
    key = order.key

    def negkey(m, _cache=cache, _key=key):
        k = _cache.get(m)
        if k is None:
            k = _cache[m] = _neg_tuple(_key(m))
        return k

    return negkey


def divide_single(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX):
    """Division by one polynomial, returning (quotient, remainder)."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    lt, lc = g.leading(order)
    key = order.key
    work = dict(f.terms)
    quotient: dict = {}
    remainder: dict = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if mono_divides(lt, m):
            shift = mono_div(m, lt)
            factor = c / lc
            quotient[shift] = quotient.get(shift, 0) + factor
            for gm, gc in g.terms.items():
                if gm == lt:
                    continue
                t = mono_mul(gm, shift)
                s = work.get(t, 0) - factor * gc
                if s:
                    work[t] = s
                else:
                    work.pop(t, None)
        else:
            remainder[m] = c
    return Polynomial(f.vars, quotient), Polynomial(f.vars, remainder)


def exact_divide(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX):
    q, r = divide_single(f, g, order)
    if not r.is_zero:
        raise ValueError("exact division with nonzero remainder")
    return q


def _primitive(f: Polynomial) -> Polynomial:
    """Integer-primitive scalar multiple of f (positive leading content).

    Keeping basis elements primitive instead of monic avoids the rational
    coefficient blowup that makes Buchberger crawl on dense inputs.
    """
    if f.is_zero:
        return f
    from math import gcd, lcm
    den = 1
    for c in f.terms.values():
        den = lcm(den, c.denominator)
    num = 0
    for c in f.terms.values():
        num = gcd(num, abs(c.numerator * (den // c.denominator)))
    if den == 1 and num == 1:
        return f
    return f.scale(Fraction(den, num))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, cf = f.leading(order)
    lg, cg = g.leading(order)
    lcm = mono_lcm(lf, lg)
    mf = mono_div(lcm, lf)
    mg = mono_div(lcm, lg)
    vars = f.vars
    a = Polynomial(vars, {mf: Fraction(1) / cf})
    b = Polynomial(vars, {mg: Fraction(1) / cg})
    return a * f - b * g


def buchberger(gens, order: MonomialOrder):
    """Reduced Groebner basis of <gens> under `order`.

    Buchberger with the coprime-leading-monomial and chain criteria and a
    degree-ordered pair queue; output is monic, auto-reduced, and sorted by
    ascending leading monomial (hence deterministic).
    """
    vars = None
    basis: list[Polynomial] = []
    key = order.key
    start = sorted(
        (g for g in gens if not g.is_zero),
        key=lambda g: key(g.leading(order)[0]),
    )
    for g in start:
        vars = g.vars
        g = _normal_form_scaled(g, basis, order)
        if not g.is_zero:
            basis.append(_primitive(g))
    if not basis:
        return []

    lts = [g.leading(order)[0] for g in basis]
    heap: list = []
    pending: set = set()
    counter = 0

    def push_pair(i, j):
        nonlocal counter
        lcm = mono_lcm(lts[i], lts[j])
        counter += 1
        heapq.heappush(heap, (mono_deg(lcm), key(lcm), counter, i, j, lcm))
        pending.add((i, j))

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            push_pair(i, j)

    while heap:
        _, _, _, i, j, lcm = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        # coprime leading monomials: s-poly reduces to zero
        if lcm == mono_mul(lts[i], lts[j]):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(lts[k], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(basis[i], basis[j], order)
        r = _normal_form_scaled(s, basis, order)
        if r.is_zero:
            continue
        r = _primitive(r)
        basis.append(r)
        lts.append(r.leading(order)[0])
        new = len(basis) - 1
        for t in range(new):
            push_pair(t, new)

    # minimalize: drop elements whose LT is divisible by another LT
    minimal: list[Polynomial] = []
    for i, g in enumerate(basis):
        lt = lts[i]
        if any(
            mono_divides(lts[j], lt) and (lts[j] != lt or j < i)
            for j in range(len(basis))
            if j != i
        ):
            continue
        minimal.append(g)
    # auto-reduce tails
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = _normal_form_scaled(g, others, order)
        if not r.is_zero:
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: key(g.leading(order)[0]))
    return reduced


class Ideal:
    """Ideal of the ambient polynomial ring, with a per-order GB cache.

    The cache is write-once per order: determinism of the reduced basis
    makes concurrent recomputation benign.
    """

    __slots__ = ("vars", "gens", "_gb")

    def __init__(self, vars, gens):
        self.vars = tuple(vars)
        self.gens = tuple(g for g in gens if not g.is_zero)
        for g in self.gens:
            if g.vars != self.vars:
                raise ValueError("generator over a different variable list")
        self._gb: dict = {}

    def groebner(self, order: MonomialOrder = DEGREVLEX):
        gb = self._gb.get(order)
        if gb is None:
            gb = tuple(buchberger(self.gens, order))
            self._gb[order] = gb
        return gb

    def contains(self, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> bool:
        return normal_form(f, self.groebner(order), order).is_zero

    def reduce(self, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        return normal_form(f, self.groebner(order), order)

    @property
    def is_zero(self) -> bool:
        return not self.groebner()

    @property
    def is_unit(self) -> bool:
        gb = self.groebner()
        return bool(gb) and gb[0].is_constant

    def equals(self, other: "Ideal") -> bool:
        if self.vars != other.vars:
            return False
        return self.groebner() == other.groebner()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal(<{inner}>)"


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.vars != J.vars:
        raise ValueError("ideal sum over mismatched variable lists")
    return Ideal(I.vars, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    # multiply the reduced bases, not the raw generators: pairwise products
    # of raw generator lists give terrible presentations downstream
    if I.vars != J.vars:
        raise ValueError("ideal product over mismatched variable lists")
    return Ideal(I.vars, tuple(f * g for f in I.groebner() for g in J.groebner()))


def _fresh_var(vars) -> str:
    name = "t"
    while name in vars:
        name += "_"
    return name


def _lift(f: Polynomial, newvars) -> Polynomial:
    return Polynomial(newvars, {(0,) + m: c for m, c in f.terms.items()})


def _drop_first(f: Polynomial, vars) -> Polynomial:
    return Polynomial(vars, {m[1:]: c for m, c in f.terms.items()})


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via the single tag variable t: eliminate t from t·I + (1-t)·J."""
    if I.vars != J.vars:
        raise ValueError("ideal intersection over mismatched variable lists")
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    if I.is_zero or J.is_zero:
        return Ideal(I.vars, ())
    tag = _fresh_var(I.vars)
    newvars = (tag,) + I.vars
    t = Polynomial.variable(newvars, tag)
    one = Polynomial.one(newvars)
    # lift the reduced bases, not the raw generators: raw generator lists
    # (e.g. from ideal products) can be large and high-degree, and the tag
    # elimination is very sensitive to the input presentation
    gens = [t * _lift(f, newvars) for f in I.groebner()]
    gens += [(one - t) * _lift(g, newvars) for g in J.groebner()]
    order = elimination_order((0,))
    gb = buchberger(gens, order)
    kept = [_drop_first(g, I.vars) for g in gb if all(m[0] == 0 for m in g.terms)]
    return Ideal(I.vars, kept)


def _standard_monomials(lts, nvars, cap=4096):
    """Monomials outside <lts>, when that set is finite and small.

    Finiteness is certified by a pure power of every variable appearing
    among the leading terms; returns None when the criterion fails or the
    search space exceeds the cap.
    """
    bounds = []
    for i in range(nvars):
        b = None
        for lt in lts:
            if lt[i] and all(e == 0 for j, e in enumerate(lt) if j != i):
                b = lt[i] if b is None else min(b, lt[i])
        if b is None:
            return None
        bounds.append(b)
    total = 1
    for b in bounds:
        total *= b
        if total > cap:
            return None
    from itertools import product as _product
    return [
        m
        for m in _product(*(range(b) for b in bounds))
        if not any(mono_divides(lt, m) for lt in lts)
    ]


def _fraction_kernel(A):
    """Basis of the kernel of the square matrix A over the rationals."""
    n = len(A)
    M = [row[:] for row in A]
    pivots = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, n) if M[i][c]), None)
        if pivot_row is None:
            continue
        M[r], M[pivot_row] = M[pivot_row], M[r]
        inv = Fraction(1) / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                factor = M[i][c]
                M[i] = [x - factor * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -M[i][fc]
        basis.append(v)
    return basis


def _quotient_finite_dim(I: Ideal, f: Polynomial, order=DEGREVLEX):
    """(I : f) by linear algebra in the finite-dimensional algebra R/I.

    g lies in (I : f) iff multiplication by f kills the residue of g, so
    the quotient is I plus the kernel of the multiplication matrix on the
    standard-monomial basis.  Returns None when R/I is not visibly
    finite-dimensional; the tag elimination handles those, but it is far
    slower exactly in the zero-dimensional cases this covers.
    """
    G = I.groebner(order)
    if not G:
        return None
    lts = [g.leading(order)[0] for g in G]
    B = _standard_monomials(lts, len(I.vars))
    if B is None or len(B) > 512:
        return None
    index = {m: i for i, m in enumerate(B)}
    n = len(B)
    cols = []
    for m in B:
        r = normal_form(f * Polynomial(I.vars, {m: Fraction(1)}), G, order)
        col = [Fraction(0)] * n
        for mm, c in r.terms.items():
            col[index[mm]] = c
        cols.append(col)
    A = [[cols[j][i] for j in range(n)] for i in range(n)]
    gens = list(I.gens)
    for v in _fraction_kernel(A):
        gens.append(Polynomial(I.vars, {B[j]: v[j] for j in range(n) if v[j]}))
    return Ideal(I.vars, tuple(gens))


def ideal_quotient(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = {g : f·g in I}, via (I ∩ <f>)/f.

    When R/I is finite-dimensional the quotient comes from linear algebra
    instead; the elimination route can blow up on exactly those inputs.
    """
    if f.is_zero:
        raise ValueError("ideal quotient by the zero polynomial")
    if I.is_unit:
        return I
    finite = _quotient_finite_dim(I, f)
    if finite is not None:
        return finite
    principal = Ideal(I.vars, (f,))
    inter = ideal_intersect(I, principal)
    gens = [exact_divide(g, f) for g in inter.gens]
    return Ideal(I.vars, gens)


def ideal_quotient_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = intersection of (I : g) over the generators g of J."""
    gens = [g for g in J.gens if not g.is_zero]
    if not gens:
        raise ValueError("ideal quotient by the zero ideal")
    result = ideal_quotient(I, gens[0])
    for g in gens[1:]:
        if result.is_zero:
            return result
        result = ideal_intersect(result, ideal_quotient(I, g))
    return result


def saturate(I: Ideal, f: Polynomial):
    """(I : f^inf); returns (stable ideal, exponent s).

    s is the least exponent with (I : f^s) = (I : f^(s+1)).  The stable
    ideal comes from one elimination (the inverted-variable trick); the
    exponent from membership tests f^s·T ⊆ I, which pin down the same s
    because the quotient chain (I : f^k) increases monotonically to T.
    Iterating ideal_quotient instead would intersect against a principal
    ideal once per step, which is far more expensive for dense f.
    """
    if f.is_zero:
        raise ValueError("saturation by the zero polynomial")
    if I.is_unit:
        return I, 0
    T = saturate_rabinowitsch(I, f)
    power = Polynomial.one(I.vars)
    s = 0
    while not all(ideal_member(power * g, I) for g in T.groebner()):
        power = power * f
        s += 1
        if s > _MAX_SATURATION_EXPONENT:
            raise ValueError("saturation exponent search did not terminate")
    return T, s


_MAX_SATURATION_EXPONENT = 64


def saturate_rabinowitsch(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^inf) via the inverted-variable trick; cross-check route."""
    if f.is_zero:
        raise ValueError("saturation by the zero polynomial")
    tag = _fresh_var(I.vars)
    newvars = (tag,) + I.vars
    t = Polynomial.variable(newvars, tag)
    one = Polynomial.one(newvars)
    gens = [_lift(g, newvars) for g in I.groebner()]
    gens.append(one - t * _lift(f, newvars))
    order = elimination_order((0,))
    gb = buchberger(gens, order)
    kept = [_drop_first(g, I.vars) for g in gb if all(m[0] == 0 for m in g.terms)]
    return Ideal(I.vars, kept)


def eliminate(I: Ideal, drop) -> Ideal:
    """I ∩ k[kept variables], returned in the same ambient ring."""
    drop = set(drop)
    unknown = drop - set(I.vars)
    if unknown:
        raise ValueError(f"cannot eliminate unknown variables: {sorted(unknown)}")
    if not drop:
        return I
    idx = tuple(i for i, v in enumerate(I.vars) if v in drop)
    order = elimination_order(idx)
    gb = I.groebner(order)
    kept = [g for g in gb if all(all(m[i] == 0 for i in idx) for m in g.terms)]
    return Ideal(I.vars, kept)
