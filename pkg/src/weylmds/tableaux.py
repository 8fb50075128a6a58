"""Symplectic standard shifted tableaux and their statistics.

A tableau of shifted shape mu (strictly decreasing row lengths) has row R
occupying columns R .. R + mu_R - 1, filled from the ordered alphabet
1' < 1 < 2' < 2 < ... < r' < r (primes rendered as a trailing underscore),
weakly increasing along rows and columns and strictly increasing along
northwest-southeast diagonals.  Standardness additionally requires the
diagonal entry of row R to be R' or R; fillings read off strict patterns
always satisfy every other condition.

The correspondence with strict patterns: the pattern entry a_{i-1,j} counts
the boxes in tableau row j-i+1 with letters <= r-i+1, and b_{i,j} counts
those with letters <= (r-i+1)'.
"""

from dataclasses import dataclass
from functools import cached_property

from .patterns import GTPattern, classify_entry, is_strict


def letter_key(value: int, barred: bool) -> int:
    """Position of a letter in the alphabet order; barred sorts first."""
    return 2 * value - (1 if barred else 0)


@dataclass(frozen=True)
class ShiftedTableau:
    """rows[R-1] is a tuple of (value, barred) letters for row R."""

    rank: int
    rows: tuple

    @property
    def mu(self) -> tuple:
        return tuple(len(row) for row in self.rows)

    def cells(self):
        """(row, col, letter) triples with 1-based shifted coordinates."""
        for R, row in enumerate(self.rows, start=1):
            for off, letter in enumerate(row):
                yield R, R + off, letter

    def validate(self, standard: bool = True) -> None:
        mu = self.mu
        if len(mu) != self.rank:
            raise ValueError("tableau must have exactly r rows")
        if any(mu[k] <= mu[k + 1] for k in range(len(mu) - 1)) or mu[-1] < 1:
            raise ValueError("row lengths must strictly decrease")
        grid = {(R, c): letter for R, c, letter in self.cells()}
        for (R, c), (val, bar) in grid.items():
            if not 1 <= val <= self.rank:
                raise ValueError("letter value out of range")
            k = letter_key(val, bar)
            right = grid.get((R, c + 1))
            if right is not None and letter_key(*right) < k:
                raise ValueError("rows must weakly increase")
            below = grid.get((R + 1, c))
            if below is not None and letter_key(*below) < k:
                raise ValueError("columns must weakly increase")
            diag = grid.get((R + 1, c + 1))
            if diag is not None and letter_key(*diag) <= k:
                raise ValueError("diagonals must strictly increase")
        if standard:
            for R, row in enumerate(self.rows, start=1):
                if letter_key(*row[0]) > letter_key(R, False):
                    raise ValueError(
                        f"row {R} does not start with {R}' or {R}")

    def is_standard(self) -> bool:
        return all(letter_key(*row[0]) <= letter_key(R, False)
                   for R, row in enumerate(self.rows, start=1))

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "shape": list(self.mu),
                "rows": [[render_letter(x) for x in row]
                         for row in self.rows]}

    @staticmethod
    def from_json(obj) -> "ShiftedTableau":
        rows = tuple(tuple(parse_letter(s) for s in row)
                     for row in obj["rows"])
        return ShiftedTableau(int(obj["rank"]), rows)

    def render_text(self) -> str:
        lines = []
        for R, row in enumerate(self.rows, start=1):
            pad = "   " * (R - 1)
            lines.append(pad + " ".join(f"{render_letter(x):<2s}"
                                        for x in row).rstrip())
        return "\n".join(lines)


def render_letter(letter) -> str:
    value, barred = letter
    return f"{value}_" if barred else str(value)


def parse_letter(s: str):
    if s.endswith("_"):
        return int(s[:-1]), True
    return int(s), False


def tableau_from_pattern(P: GTPattern) -> ShiftedTableau:
    """Fill the shifted diagram so the counting rules reproduce P."""
    if not is_strict(P):
        raise ValueError("only strict patterns correspond to tableaux")
    r = P.rank
    rows = []
    for R in range(1, r + 1):
        length = P.a[0][R - 1]
        # cumulative counts of letters <= each alphabet position
        cum = []
        for val in range(1, r + 1):
            i = r - val + 1          # pattern pair index for this letter
            j = R + i - 1            # pattern column hitting row R
            cum.append(P.b_entry(i, j, 0))   # <= val'
            cum.append(P.a_entry(i - 1, j, 0))  # <= val
        row = []
        for box in range(1, length + 1):
            pos = next(idx for idx, c in enumerate(cum) if c >= box)
            value, barred = divmod(pos, 2)
            row.append((value + 1, barred == 0))
        rows.append(tuple(row))
    S = ShiftedTableau(r, tuple(rows))
    S.validate(standard=False)
    return S


def pattern_from_tableau(S: ShiftedTableau) -> GTPattern:
    """Read the counting rules backwards; inverse of tableau_from_pattern."""
    S.validate(standard=False)
    r = S.rank

    def count(R, key):
        if not 1 <= R <= r:
            return 0
        return sum(1 for x in S.rows[R - 1] if letter_key(*x) <= key)

    a_rows = [tuple(len(row) for row in S.rows)]
    for i in range(1, r):
        a_rows.append(tuple(count(j - i, letter_key(r - i, False))
                            for j in range(i + 1, r + 1)))
    b_rows = [tuple(count(j - i + 1, letter_key(r - i + 1, True))
                    for j in range(i, r + 1))
              for i in range(1, r + 1)]
    P = GTPattern(r, tuple(a_rows), tuple(b_rows))
    if not is_strict(P):
        raise ValueError("tableau does not encode a strict pattern")
    return P


@dataclass(frozen=True)
class TableauStats:
    """The six statistics of a tableau."""

    wgt: tuple
    con: tuple       # components of the unbarred-k strip, k = 1..r
    row_unbarred: tuple
    row_barred: tuple
    str_total: int   # components over all 2r letters
    barred: int
    height: int


def _components(cells) -> int:
    cells = set(cells)
    comps = 0
    while cells:
        comps += 1
        stack = [cells.pop()]
        while stack:
            R, c = stack.pop()
            for nb in ((R + 1, c), (R - 1, c), (R, c + 1), (R, c - 1)):
                if nb in cells:
                    cells.remove(nb)
                    stack.append(nb)
    return comps


def tableau_stats(S: ShiftedTableau) -> TableauStats:
    r = S.rank
    by_letter = {}
    for R, c, letter in S.cells():
        by_letter.setdefault(letter, []).append((R, c))
    wgt = tuple(len(by_letter.get((k, False), ()))
                - len(by_letter.get((k, True), ()))
                for k in range(1, r + 1))
    con = tuple(_components(by_letter.get((k, False), ()))
                for k in range(1, r + 1))
    row_unb = tuple(len({R for R, _ in by_letter.get((k, False), ())})
                    for k in range(1, r + 1))
    row_bar = tuple(len({R for R, _ in by_letter.get((k, True), ())})
                    for k in range(1, r + 1))
    str_total = sum(_components(cells) for cells in by_letter.values())
    barred = sum(len(v) for (k, b), v in by_letter.items() if b)
    height = sum(row_unb[k] - con[k] - row_bar[k] for k in range(r))
    return TableauStats(wgt, con, row_unb, row_bar, str_total, barred, height)


def classification_counts(P: GTPattern):
    """(#generic, #maximal) entries over the whole pattern."""
    r = P.rank
    gen = mx = 0
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            tag = classify_entry(P, ("b", i, j))
            gen += tag == "generic"
            mx += tag == "maximal"
    for i in range(1, r):
        for j in range(i + 1, r + 1):
            tag = classify_entry(P, ("a", i, j))
            gen += tag == "generic"
            mx += tag == "maximal"
    return gen, mx


def verify_tableau_stats(P: GTPattern) -> bool:
    """Entry-classification counts against tableau statistics:
    #generic = str - r and #maximal = height + r(r+1)/2."""
    S = tableau_from_pattern(P)
    stats = tableau_stats(S)
    gen, mx = classification_counts(P)
    r = P.rank
    return (gen == stats.str_total - r
            and mx == stats.height + r * (r + 1) // 2
            and stats.wgt == P.wgt)
