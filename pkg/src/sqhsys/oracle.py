"""Brute-force enumeration by scanning weight vectors.

For each candidate ``(s1, s2, d1, d2)`` the full solution support of the
weight relations within total degree ``n`` is computed directly; supports
that form a non-semihomogeneous system of degree exactly ``n`` with nonzero
index are collected.  This is independent of the structured algorithm in
:mod:`sqhsys.enumerator` and serves as its cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .enumerator import Family
from .weights import WeightVector, index_of

Exponent = tuple[int, int]


@dataclass(frozen=True)
class SupportFamily:
    support_p: frozenset
    support_q: frozenset
    witness_w: WeightVector

    @property
    def supports(self) -> tuple[frozenset, frozenset]:
        return (self.support_p, self.support_q)

    @property
    def degree(self) -> int:
        return max(i + j for i, j in self.support_p | self.support_q)


def _monomials(n: int) -> list[Exponent]:
    return [(i, j) for i in range(n + 1) for j in range(n + 1 - i)]


def brute_force_families(n: int, s_bound: int | None = None, d_bound: int | None = None) -> list[SupportFamily]:
    if s_bound is None:
        s_bound = n
    if d_bound is None:
        d_bound = n * s_bound + 1
    if s_bound < 1 or d_bound < 1:
        raise ValueError("bounds must be positive")
    monos = _monomials(n)
    found: dict[tuple, SupportFamily] = {}
    for s1 in range(2, s_bound + 1):
        for s2 in range(1, s1):
            if gcd(s1, s2) != 1:
                continue
            # group monomials by the d each one would force
            p_by_d: dict[int, list] = {}
            q_by_d: dict[int, list] = {}
            for i, j in monos:
                p_by_d.setdefault((i - 1) * s1 + j * s2 + 1, []).append((i, j))
                q_by_d.setdefault(i * s1 + (j - 1) * s2 + 1, []).append((i, j))
            for d1 in range(1, d_bound + 1):
                supp_p = frozenset(p_by_d.get(d1, ()))
                if not supp_p:
                    continue
                for d2 in range(1, d_bound + 1):
                    if d1 == d2:
                        continue
                    supp_q = frozenset(q_by_d.get(d2, ()))
                    if not supp_q:
                        continue
                    if max(i + j for i, j in supp_p | supp_q) != n:
                        continue
                    if len({i + j for i, j in supp_p}) <= 1 and len({i + j for i, j in supp_q}) <= 1:
                        continue
                    w = WeightVector(s1, s2, d1, d2)
                    if index_of(w) == 0:
                        continue
                    found.setdefault((supp_p, supp_q), SupportFamily(supp_p, supp_q, w))
    return sorted(found.values(), key=lambda f: (f.witness_w.as_tuple(), sorted(f.support_p), sorted(f.support_q)))


@dataclass
class DiffReport:
    only_oracle: list[tuple[frozenset, frozenset]] = field(default_factory=list)
    only_enumerator: list[tuple[frozenset, frozenset]] = field(default_factory=list)
    degree_mismatch: bool = False

    @property
    def empty(self) -> bool:
        return not (self.only_oracle or self.only_enumerator or self.degree_mismatch)

    def lines(self) -> list[str]:
        out = []
        if self.degree_mismatch:
            out.append("degree mismatch between the two listings")
        for tag, items in (("oracle only", self.only_oracle), ("enumerator only", self.only_enumerator)):
            for sp, sq in items:
                out.append(f"{tag}: P{sorted(sp)} Q{sorted(sq)}")
        return out


def diff_family_sets(a: list[SupportFamily], b: list[Family]) -> DiffReport:
    sa = {f.supports for f in a}
    sb = {f.supports for f in b}
    deg_a = {f.degree for f in a}
    deg_b = {f.n for f in b}
    report = DiffReport(
        only_oracle=sorted(sa - sb, key=_support_key),
        only_enumerator=sorted(sb - sa, key=_support_key),
    )
    report.degree_mismatch = bool(deg_a and deg_b and deg_a != deg_b)
    return report


def _support_key(s):
    return (sorted(s[0]), sorted(s[1]))


def anomalies_above_degree_bound(n: int, s_bound: int) -> list[SupportFamily]:
    """Families that only appear when ``s1`` exceeds ``n``."""
    base = {f.supports for f in brute_force_families(n)}
    return [f for f in brute_force_families(n, s_bound) if f.supports not in base]
