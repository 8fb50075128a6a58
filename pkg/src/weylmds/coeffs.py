"""Per-entry weighting factors and the prime-power coefficient table.

Every entry of a pattern carries a factor: q^{v} or q^{u} at minimal
entries, and a Gauss sum g_t(p^{c}, p^{modulus exponent}) otherwise.  The
product over all entries of a strict pattern is G(P); grouping the G(P) by
support vector k(P) gives the coefficient table H(p^k; p^l).

Degenerate coincidence: an entry b_{i,r} = a_{i-1,r} = 0 meets both the
minimal and the maximal equality at once.  Its factor is zero - the only
convention under which the stable-case product formula and the n = 1
character identities both hold (such patterns correspond to fillings that
are not standard shifted tableaux).
"""

from dataclasses import dataclass

from .gauss import GaussValue, gauss_eval
from .patterns import (GTPattern, LambdaTwist, enumerate_patterns,
                       entry_bounds_flags, is_strict)


def gamma_b(P: GTPattern, i: int, j: int, n: int) -> GaussValue:
    """Factor attached to b_{i,j} (compact form)."""
    r = P.rank
    b = P.b_entry(i, j)
    if b is None:
        raise ValueError(f"no entry b_{{{i},{j}}}")
    is_min, is_max = entry_bounds_flags(P, ("b", i, j))
    if is_min and is_max:
        return GaussValue.zero(n)
    v = P.v_data(i, j)
    if is_min:
        return GaussValue.q_power(n, v)
    t = 2 if j == r else 1
    low = P.a_entry(i - 1, j + 1, 0)
    return gauss_eval(t, v + b - low - 1, v, n)


def gamma_b_long(P: GTPattern, i: int, j: int, n: int) -> GaussValue:
    """Factor attached to b_{i,j}, spelled out case by case."""
    r = P.rank
    is_min, is_max = entry_bounds_flags(P, ("b", i, j))
    if is_min and is_max:
        return GaussValue.zero(n)
    v = P.v_data(i, j)
    t = 2 if j == r else 1
    if is_max:
        return gauss_eval(t, v - 1, v, n)
    if is_min:
        return GaussValue.q_power(n, v)
    if (v * t) % n == 0:
        return GaussValue.phi(n, v)
    return GaussValue.zero(n)


def gamma_a(P: GTPattern, i: int, j: int, n: int) -> GaussValue:
    """Factor attached to a_{i,j}, i >= 1 (compact form)."""
    a = P.a_entry(i, j)
    if a is None or i < 1:
        raise ValueError(f"no entry a_{{{i},{j}}}")
    if a == P.b_entry(i, j):
        return GaussValue.q_power(n, P.u_data(i, j))
    u = P.u_data(i, j)
    return gauss_eval(1, u - a + P.b_entry(i, j - 1) - 1, u, n)


def gamma_a_long(P: GTPattern, i: int, j: int, n: int) -> GaussValue:
    """Factor attached to a_{i,j}, spelled out case by case."""
    is_min, is_max = entry_bounds_flags(P, ("a", i, j))
    u = P.u_data(i, j)
    if is_min:
        return GaussValue.q_power(n, u)
    if is_max:
        return gauss_eval(1, u - 1, u, n)
    if u % n == 0:
        return GaussValue.phi(n, u)
    return GaussValue.zero(n)


def pattern_G(P: GTPattern, n: int) -> GaussValue:
    """Product of all entry factors; zero for non-strict patterns."""
    if not is_strict(P):
        return GaussValue.zero(n)
    r = P.rank
    out = GaussValue.one(n)
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            out = out * gamma_b(P, i, j, n)
            if out.is_zero():
                return out
        for j in range(i + 1, r + 1):
            if i <= r - 1:
                out = out * gamma_a(P, i, j, n)
                if out.is_zero():
                    return out
    return out


def verify_k_sum(P: GTPattern) -> bool:
    """sum k_i = sum v_{i,j} + sum u_{i,j}, exactly."""
    r = P.rank
    total_v = sum(P.v_data(i, j) for i in range(1, r + 1)
                  for j in range(i, r + 1))
    total_u = sum(P.u_data(i, j) for i in range(1, r + 1)
                  for j in range(i + 1, r + 1))
    return sum(P.k_vec) == total_v + total_u


@dataclass(frozen=True)
class HTable:
    """Prime-power coefficients: a finite map k -> GaussValue.

    Keys cover every k hit by some pattern; values that cancel to zero are
    retained so that cancellation is distinguishable from empty support."""

    twist: LambdaTwist
    n: int
    entries: tuple  # ((k, GaussValue), ...) sorted by k

    def value(self, k) -> GaussValue:
        k = tuple(k)
        for key, val in self.entries:
            if key == k:
                return val
        return GaussValue.zero(self.n)

    def keys(self):
        return [k for k, _ in self.entries]

    def nonzero_keys(self):
        return [k for k, v in self.entries if not v.is_zero()]

    def to_json(self) -> dict:
        return {"l": list(self.twist.l), "n": self.n,
                "entries": [{"k": list(k), "value": v.to_json()}
                            for k, v in self.entries]}


def h_table(twist: LambdaTwist, n: int) -> HTable:
    """Group pattern products over GT(lambda+rho) by support vector."""
    if n < 1:
        raise ValueError("degree must be positive")
    acc = {}
    for P in enumerate_patterns(twist.top_row):
        k = P.k_vec
        g = pattern_G(P, n)
        acc[k] = acc[k] + g if k in acc else g
    return HTable(twist, n, tuple(sorted(acc.items())))
