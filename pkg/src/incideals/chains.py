"""Chains of monomial ideals closed under index-increasing substitutions.

A chain is determined by a seed ideal at a starting width r: the term at
width n >= r is generated by all images of the seed's generators under
strictly increasing maps [r] -> [n] (or under arbitrary injections for the
symmetric variant).  Terms below r default to zero but can be overridden
with an explicit head.

Derived chains: the saturation replaces each term with the limit ideal cut
back to its width, and the m-saturation rebuilds terms from all earlier
ones shifted by a pure power of the newest variable.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import AmbientMismatch, ImproperIdeal
from .monomials import (
    Monomial,
    MonomialIdeal,
    minimalize,
    q_invariant,
)

__all__ = [
    "Symmetry",
    "OrbitChain",
    "SaturationChain",
    "MSaturationChain",
    "Chain",
    "inc_orbit",
    "inc_orbit_by_shifts",
    "sym_orbit",
    "term",
    "saturation",
    "saturated_truncation",
    "m_saturation",
    "ChainInvariants",
    "chain_invariants",
    "colon_filtration",
    "colon_filtration_term",
]


class Symmetry(str, Enum):
    INC = "inc"
    SYM = "sym"


# -- orbits of single monomials --------------------------------------------

def inc_orbit(u: Monomial, m: int, n: int) -> frozenset[Monomial]:
    """Images of u under strictly increasing maps [m] -> [n].

    Enumerates image supports directly: positions c_1 < ... < c_k with
    c_1 >= i_1, gaps at least those of the original support, and enough
    room above c_k to place the remaining m - i_k source points.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if u.ambient > m:
        raise AmbientMismatch(f"{u!r} does not live in width {m}")
    supp = u.support
    if not supp:
        return frozenset({Monomial.one(n)})
    exps = [e for _, e in u.exps]
    k = len(supp)
    last_limit = n - (m - supp[-1])
    out: set[Monomial] = set()

    def place(idx: int, prefix: list[int]) -> None:
        if idx == k:
            out.add(
                Monomial(tuple(zip(prefix, exps)), n)
            )
            return
        lo = supp[0] if idx == 0 else prefix[-1] + (supp[idx] - supp[idx - 1])
        hi = last_limit - (supp[-1] - supp[idx])
        for c in range(lo, hi + 1):
            prefix.append(c)
            place(idx + 1, prefix)
            prefix.pop()

    place(0, [])
    return frozenset(out)


def _shift_above(u: Monomial, j: int) -> Monomial:
    """Move every variable index above j up by one; width grows by one."""
    return Monomial(
        tuple((i if i <= j else i + 1, e) for i, e in u.exps), u.ambient + 1
    )


def inc_orbit_by_shifts(u: Monomial, m: int, n: int) -> frozenset[Monomial]:
    """Same orbit, built one width at a time from elementary shifts.

    Going from width t to t+1 applies every map fixing 1..j and shifting
    the rest up, j = 0..t; iterating from m to n matches inc_orbit and
    serves as its independent oracle.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if u.ambient > m:
        raise AmbientMismatch(f"{u!r} does not live in width {m}")
    level = {Monomial(u.exps, m)}
    for width in range(m, n):
        level = {_shift_above(v, j) for v in level for j in range(width + 1)}
    return frozenset(level)


def sym_orbit(u: Monomial, n: int) -> frozenset[Monomial]:
    """Images of u under all injections of its support into [n]."""
    supp = u.support
    if len(supp) > n:
        raise ValueError(f"{u!r} has support wider than {n}")
    exps = [e for _, e in u.exps]
    out: set[Monomial] = set()
    for targets in itertools.permutations(range(1, n + 1), len(supp)):
        pairs = sorted(zip(targets, exps))
        out.add(Monomial(tuple(pairs), n))
    return frozenset(out)


def _orbit(u: Monomial, m: int, n: int, symmetry: Symmetry) -> frozenset[Monomial]:
    if symmetry is Symmetry.INC:
        return inc_orbit(u, m, n)
    return sym_orbit(u, n)


def _orbit_within(u: Monomial, m: int, n: int, symmetry: Symmetry) -> frozenset[Monomial]:
    """Images under maps [m] -> [N] (N arbitrary) that land inside [n].

    For the increasing case this drops the room-above-c_k constraint of
    inc_orbit; for the symmetric case it coincides with sym_orbit.
    """
    if symmetry is Symmetry.SYM:
        if len(u.support) > n:
            return frozenset()
        return sym_orbit(u, n)
    supp = u.support
    if not supp:
        return frozenset({Monomial.one(n)})
    if len(supp) > n:
        return frozenset()
    exps = [e for _, e in u.exps]
    k = len(supp)
    out: set[Monomial] = set()

    def place(idx: int, prefix: list[int]) -> None:
        if idx == k:
            out.add(Monomial(tuple(zip(prefix, exps)), n))
            return
        lo = supp[0] if idx == 0 else prefix[-1] + (supp[idx] - supp[idx - 1])
        hi = n - (supp[-1] - supp[idx])
        for c in range(lo, hi + 1):
            prefix.append(c)
            place(idx + 1, prefix)
            prefix.pop()

    place(0, [])
    return frozenset(out)


# -- chain families --------------------------------------------------------

@dataclass(frozen=True)
class OrbitChain:
    """Chain generated in each width by the orbit of a fixed seed ideal.

    The seed lives at width `index`; terms below the index are zero unless
    an explicit head (terms at widths 1..index-1) is supplied.  Head terms
    must map into their successors, seed included.
    """

    seed: MonomialIdeal
    index: int
    symmetry: Symmetry = Symmetry.INC
    head: tuple[MonomialIdeal, ...] = ()

    saturated_by_construction = False

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError("chain index must be at least 1")
        if self.seed.ambient != self.index:
            raise AmbientMismatch(
                f"seed width {self.seed.ambient} != chain index {self.index}"
            )
        if self.seed.is_zero:
            raise ImproperIdeal("a chain seed must be nonzero")
        if self.head:
            if len(self.head) != self.index - 1:
                raise ValueError(
                    f"head must cover widths 1..{self.index - 1}"
                )
            for w, t in enumerate(self.head, start=1):
                if t.ambient != w:
                    raise AmbientMismatch(f"head term {w} has width {t.ambient}")
            for w, t in enumerate(self.head, start=1):
                for target in range(w + 1, self.index + 1):
                    tgt = (
                        self.seed
                        if target == self.index
                        else self.head[target - 1]
                    )
                    for g in t.gens:
                        for img in _orbit(g, w, target, self.symmetry):
                            if img not in tgt:
                                raise ValueError(
                                    f"head term {w} does not map into term {target}"
                                )

    def _compute_term(self, n: int) -> MonomialIdeal:
        if n < self.index:
            if self.head:
                return self.head[n - 1]
            return MonomialIdeal.zero(n)
        gens: list[Monomial] = []
        for g in self.seed.gens:
            gens.extend(_orbit(g, self.index, n, self.symmetry))
        return minimalize(gens, n)


@dataclass(frozen=True)
class SaturationChain:
    """The chain of limit-ideal truncations of a base orbit chain.

    Term n is the full orbit of the seed cut to width n: all images that
    fit inside [n], with no room reserved above, which equals restricting
    a far-enough term of the base chain.
    """

    base: OrbitChain

    saturated_by_construction = True

    def __post_init__(self) -> None:
        if not isinstance(self.base, OrbitChain):
            raise TypeError("saturation applies to orbit chains")

    @property
    def index(self) -> int:
        return self.base.index

    @property
    def symmetry(self) -> Symmetry:
        return self.base.symmetry

    @property
    def seed(self) -> MonomialIdeal:
        return self.base.seed

    def _compute_term(self, n: int) -> MonomialIdeal:
        gens: list[Monomial] = []
        for g in self.base.seed.gens:
            gens.extend(_orbit_within(g, self.base.index, n, self.base.symmetry))
        if not gens:
            return MonomialIdeal.zero(n)
        return minimalize(gens, n)


@dataclass(frozen=True)
class MSaturationChain:
    """Terms rebuilt from all earlier base terms times a fresh-variable power.

    Term n is generated by x_k^m * G(base term k-1) for k = 2..n; term 1 is
    zero.  Declared index is base.index + 2: by then every later term is
    the orbit of this one.
    """

    base: "Chain"
    m: int

    saturated_by_construction = True

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("the saturation exponent must be positive")

    @property
    def index(self) -> int:
        return self.base.index + 2

    @property
    def symmetry(self) -> Symmetry:
        return self.base.symmetry

    def _compute_term(self, n: int) -> MonomialIdeal:
        gens: list[Monomial] = []
        for k in range(2, n + 1):
            prev = term(self.base, k - 1)
            power = Monomial.variable(k, n, self.m)
            for g in prev.gens:
                gens.append(g.embed(n) * power)
        if not gens:
            return MonomialIdeal.zero(n)
        return minimalize(gens, n)


Chain = OrbitChain | SaturationChain | MSaturationChain


@lru_cache(maxsize=4096)
def _term_cached(chain: Chain, n: int) -> MonomialIdeal:
    return chain._compute_term(n)


def term(chain: Chain, n: int) -> MonomialIdeal:
    """The chain's ideal at width n (n >= 1)."""
    if n < 1:
        raise ValueError("width must be at least 1")
    return _term_cached(chain, n)


def saturation(chain: OrbitChain) -> SaturationChain:
    return SaturationChain(chain)


def saturated_truncation(chain: Chain, n: int) -> MonomialIdeal:
    """The limit ideal of the chain cut back to width n.

    Realized as restrict(term(n + index), n): by width n + index every
    generator of the limit with support in [n] has appeared.  Only
    meaningful for chains of the increasing family.
    """
    if getattr(chain, "symmetry", Symmetry.INC) is not Symmetry.INC:
        raise ValueError("saturated truncation is defined for increasing chains")
    if n < 1:
        raise ValueError("width must be at least 1")
    return term(chain, n + chain.index).restrict(n)


def m_saturation(chain: Chain, m: int) -> MSaturationChain:
    return MSaturationChain(chain, m)


# -- numeric invariants of a chain -----------------------------------------

@dataclass(frozen=True)
class ChainInvariants:
    """Limit weights of a chain plus the certificates behind them.

    lambda_ is the largest last-variable weight seen over the sampled
    window; it is the true limit exactly when the certificate says so
    (it reached the upper bound w, or the chain is saturated).
    """

    lambda_: int
    w: int
    q: int
    quasi_saturated: bool
    lambda_maximal: bool
    saturated_window: bool
    horizon: int
    lambda_certificate: str

    @property
    def lambda_exact(self) -> bool:
        return self.lambda_certificate in ("reached_w", "saturated")


def chain_invariants(chain: Chain, horizon: int | None = None) -> ChainInvariants:
    """Sample terms over a window and report the chain's limit weights.

    The window is [index, index + horizon], horizon defaulting to
    2 * delta(seed) + 4.  Certificates, in order of strength: reached_w,
    saturated, stable_tail, inconclusive.

    The quasi-saturation flag compares widths index and index + 1, so it
    trusts the declared index to be the width where the chain actually
    starts; a chain declared at a larger index than necessary can be
    flagged quasi-saturated without the property holding further down.
    """
    r = chain.index
    seed = term(chain, r)
    if not seed.is_proper:
        raise ImproperIdeal("chain invariants need a proper seed term")
    wts = seed.weights()
    h = horizon if horizon is not None else 2 * wts.delta + 4
    if h < 1:
        raise ValueError("horizon must be at least 1")

    lam_vals = []
    sat_ok = chain.saturated_by_construction
    sat_checked = sat_ok
    for n in range(r, r + h + 1):
        t = term(chain, n)
        lam_vals.append(t.weights().lambda_)
        if not sat_checked:
            if saturated_truncation(chain, n) != t:
                sat_ok = False
                sat_checked = True
    if not sat_checked:
        sat_ok = True
    lam = max(lam_vals)

    if lam == wts.w:
        cert = "reached_w"
    elif sat_ok:
        cert = "saturated"
    elif len(set(lam_vals[len(lam_vals) // 2 :])) == 1:
        cert = "stable_tail"
    else:
        cert = "inconclusive"

    p = wts.maxsupp
    succ = term(chain, r + 1)
    quasi = succ.restrict(p).embed(r + 1) == seed.embed(r + 1)

    return ChainInvariants(
        lambda_=lam,
        w=wts.w,
        q=q_invariant(seed),
        quasi_saturated=quasi,
        lambda_maximal=lam == wts.w,
        saturated_window=sat_ok,
        horizon=h,
        lambda_certificate=cert,
    )


# -- the colon filtration ---------------------------------------------------

def colon_filtration(chain: Chain, e: int) -> OrbitChain:
    """The orbit chain seeded by colons against the first new variable.

    With p the top support index of the seed, the new seed at width
    index+1 is (term(index+1) : x_{p+1}^e) cut back to width p.  e = 0
    just restricts.  The seed may come out as the unit ideal (e at least
    the generator exponents); such chains are allowed and have q = 0.
    """
    if getattr(chain, "symmetry", None) is not Symmetry.INC:
        raise ValueError("the colon filtration is defined for increasing chains")
    if e < 0:
        raise ValueError("the colon exponent must be nonnegative")
    r = chain.index
    seed = term(chain, r)
    if not seed.is_proper:
        raise ImproperIdeal("the colon filtration needs a proper seed term")
    p = seed.maxsupp
    nxt = term(chain, r + 1)
    x = Monomial.one(r + 1) if e == 0 else Monomial.variable(p + 1, r + 1, e)
    derived = nxt.colon(x).restrict(p).embed(r + 1)
    if derived.is_zero:
        raise ImproperIdeal("colon filtration produced a zero seed")
    return OrbitChain(seed=derived, index=r + 1, symmetry=Symmetry.INC)


def colon_filtration_term(chain: Chain, e: int, n: int) -> MonomialIdeal:
    """Definitional term of the colon filtration at width n.

    (term(n) : x_{n-r+p}^e) intersected with the polynomial ring one
    variable below that colon variable, then viewed at width n.  Used as
    the independent cross-check of colon_filtration's orbit terms.
    """
    r = chain.index
    seed = term(chain, r)
    if not seed.is_proper:
        raise ImproperIdeal("the colon filtration needs a proper seed term")
    p = seed.maxsupp
    if n <= r:
        return MonomialIdeal.zero(n)
    k = n - r + p
    x = Monomial.one(n) if e == 0 else Monomial.variable(k, n, e)
    return term(chain, n).colon(x).restrict(k - 1).embed(n)
