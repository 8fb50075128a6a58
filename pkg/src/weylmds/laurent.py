"""Exact multivariate Laurent polynomials with rational coefficients.

Terms are a map from integer exponent tuples (negative exponents allowed)
to Fractions; zero coefficients are dropped, so equality is structural.
"""

from fractions import Fraction


class LaurentPoly:
    """Immutable-by-convention Laurent polynomial in a fixed number of
    variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exps, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    if len(exps) != nvars:
                        raise ValueError("exponent arity mismatch")
                    self.terms[tuple(exps)] = c

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(nvars):
        return LaurentPoly(nvars)

    @staticmethod
    def const(nvars, c):
        return LaurentPoly(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def monomial(nvars, exps, coeff=1):
        return LaurentPoly(nvars, {tuple(exps): Fraction(coeff)})

    @staticmethod
    def variable(nvars, idx, power=1, coeff=1):
        exps = [0] * nvars
        exps[idx] = power
        return LaurentPoly.monomial(nvars, exps, coeff)

    # -- ring operations ----------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable arity mismatch")
            return other
        return LaurentPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = LaurentPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.nvars, other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    # -- substitutions -------------------------------------------------
    def substitute(self, mapping):
        """Map variable idx -> (coeff, exponent tuple); unmapped variables
        stay themselves.  Coefficients may be rational; negative powers of a
        substituted monomial invert it."""
        out = {}
        for e, c in self.terms.items():
            coeff = c
            exps = [0] * self.nvars
            for idx, power in enumerate(e):
                if power == 0:
                    continue
                if idx in mapping:
                    mc, mexp = mapping[idx]
                    coeff = coeff * Fraction(mc) ** power
                    for k, me in enumerate(mexp):
                        exps[k] += me * power
                else:
                    exps[idx] += power
            key = tuple(exps)
            out[key] = out.get(key, Fraction(0)) + coeff
        return LaurentPoly(self.nvars, out)

    def scale_vars_into(self, target_idx, var_indices):
        """Substitute x -> t x for each listed variable, t = target_idx."""
        out = {}
        for e, c in self.terms.items():
            extra = sum(e[i] for i in var_indices)
            ne = list(e)
            ne[target_idx] += extra
            ne = tuple(ne)
            out[ne] = out.get(ne, Fraction(0)) + c
        return LaurentPoly(self.nvars, out)

    def eval_at(self, values):
        """Evaluate exactly; `values[idx]` (a Fraction or int) must be
        supplied for every variable appearing with nonzero exponent."""
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for idx, power in enumerate(e):
                if power:
                    val *= Fraction(values[idx]) ** power
            total += val
        return total

    # -- exact division -------------------------------------------------
    def exact_div(self, divisor):
        """Exact quotient; raises ValueError if the division leaves a
        remainder."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.terms)
        div_lead = max(divisor.terms)
        div_lead_c = divisor.terms[div_lead]
        div_rest = [(e, c) for e, c in divisor.terms.items() if e != div_lead]
        quot = {}
        steps = 0
        while rem:
            steps += 1
            if steps > 1_000_000:
                raise ValueError("division does not terminate; not exact")
            lead = max(rem)
            qe = tuple(a - b for a, b in zip(lead, div_lead))
            qc = rem[lead] / div_lead_c
            quot[qe] = quot.get(qe, Fraction(0)) + qc
            del rem[lead]
            for e, c in div_rest:
                te = tuple(a + b for a, b in zip(qe, e))
                s = rem.get(te, Fraction(0)) - qc * c
                if s:
                    rem[te] = s
                else:
                    rem.pop(te, None)
        return LaurentPoly(self.nvars, quot)

    # -- presentation ----------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        return [{"exp": list(e), "coeff": f"{c.numerator}/{c.denominator}"}
                for e, c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = [f"{c}*x^{e}" for e, c in self.sorted_terms()]
        return "LaurentPoly(" + " + ".join(bits) + ")"
