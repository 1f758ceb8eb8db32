"""Todd-Coxeter coset enumeration (HLT strategy).

Cosets are defined lowest-unfilled-first while scanning subgroup
generators and then every relator at every live coset; coincidences are
merged through a queue over a union-find.  After closure the table is
renumbered canonically (breadth-first in generator order), so tables
are reproducible bit-for-bit.  A configurable cap bounds the number of
cosets ever defined; the environment variable VEECHLAB_COSET_CAP
overrides the default of 10**5.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import CapExceeded
from .veech import GroupWord, Presentation


DEFAULT_COSET_CAP = 10 ** 5


def coset_cap() -> int:
    value = os.environ.get("VEECHLAB_COSET_CAP")
    return int(value) if value else DEFAULT_COSET_CAP


def _word_to_cols(word: GroupWord, col: dict) -> tuple:
    return tuple(col[(sym, step)] for sym, step in word.letters())


class _Enumerator:
    def __init__(self, ncols: int, inv_col: list, cap: int):
        self.ncols = ncols
        self.inv_col = inv_col
        self.cap = cap
        self.table = [[None] * ncols]
        self.parent = [0]
        self.queue = []

    def rep(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def define(self, a: int, c: int) -> int:
        if len(self.table) >= self.cap:
            raise CapExceeded("coset cap of %d reached" % self.cap)
        b = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(b)
        self.table[a][c] = b
        self.table[b][self.inv_col[c]] = a
        return b

    def scan_and_fill(self, a: int, cols: tuple):
        a = self.rep(a)
        f, b = a, a
        i, j = 0, len(cols) - 1
        while True:
            # scan forward as far as the table allows
            while i <= j and self.table[f][cols[i]] is not None:
                f = self.rep(self.table[f][cols[i]])
                i += 1
            if i > j:
                if f != b:
                    self.coincide(f, b)
                return
            # scan backward
            while j >= i and self.table[b][self.inv_col[cols[j]]] is not None:
                b = self.rep(self.table[b][self.inv_col[cols[j]]])
                j -= 1
            if j < i:
                self.coincide(f, b)
                return
            if j == i:
                # one gap: close it (deduction)
                self.table[f][cols[i]] = b
                self.table[b][self.inv_col[cols[i]]] = f
                return
            # fill the first gap and continue scanning
            self.define(f, cols[i])

    def coincide(self, a: int, b: int):
        self.queue.append((a, b))
        while self.queue:
            x, y = self.queue.pop()
            x, y = self.rep(x), self.rep(y)
            if x == y:
                continue
            if x > y:
                x, y = y, x
            self.parent[y] = x
            row_y = self.table[y]
            row_x = self.table[x]
            for c in range(self.ncols):
                t = row_y[c]
                if t is None:
                    continue
                t = self.rep(t)
                # remove y from t's inverse slot, reattach to x
                u = row_x[c]
                if u is None:
                    row_x[c] = t
                    self.table[t][self.inv_col[c]] = x
                else:
                    self.queue.append((self.rep(u), t))

    def live_cosets(self):
        return [i for i in range(len(self.table)) if self.rep(i) == i]


@dataclass
class CosetTable:
    """Coset action of a finitely presented group on subgroup cosets."""

    presentation: Presentation
    subgroup: tuple  # the subgroup generator words
    index: int
    action: dict  # generator symbol -> tuple permutation of {0..index-1}
    transversal: tuple  # GroupWord per coset, transversal[0] trivial

    def act_letter(self, coset: int, sym: str, step: int) -> int:
        perm = self.action[sym]
        if step > 0:
            return perm[coset]
        return perm.index(coset)

    def act_word(self, coset: int, word: GroupWord) -> int:
        for sym, step in word.letters():
            coset = self.act_letter(coset, sym, step)
        return coset

    def word_permutation(self, word: GroupWord) -> tuple:
        return tuple(self.act_word(i, word) for i in range(self.index))

    def validate(self) -> bool:
        ident = tuple(range(self.index))
        for rel in self.presentation.relators:
            if self.word_permutation(rel) != ident:
                return False
        for w in self.subgroup:
            if self.act_word(0, w) != 0:
                return False
        for i, t in enumerate(self.transversal):
            if self.act_word(0, t) != i:
                return False
        # transitivity
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for sym in self.presentation.generators:
                for y in (self.action[sym][x], self.action[sym].index(x)):
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
        return len(seen) == self.index

    def to_json(self):
        from . import perms

        return {
            "index": self.index,
            "perms": {
                sym: perms.cycles(self.action[sym], include_fixed=False)
                for sym in self.presentation.generators
            },
            "transversal": [str(t) for t in self.transversal],
        }


def coset_enumerate(
    presentation: Presentation, subgroup: list, cap: int | None = None
) -> CosetTable:
    """Enumerate cosets of <subgroup> in the presented group (HLT)."""
    if cap is None:
        cap = coset_cap()
    gens = presentation.generators
    col = {}
    inv_col = []
    for g in gens:
        col[(g, 1)] = len(inv_col)
        inv_col.append(len(inv_col) + 1)
        col[(g, -1)] = len(inv_col)
        inv_col.append(len(inv_col) - 1)
    relator_cols = [_word_to_cols(r, col) for r in presentation.relators]
    subgroup_cols = [_word_to_cols(w, col) for w in subgroup]

    enum = _Enumerator(2 * len(gens), inv_col, cap)
    for w in subgroup_cols:
        enum.scan_and_fill(0, w)
    i = 0
    while i < len(enum.table):
        if enum.rep(i) == i:
            for rel in relator_cols:
                enum.scan_and_fill(i, rel)
                if enum.rep(i) != i:
                    break
        i += 1
    live = enum.live_cosets()
    # no unfilled entries may remain after HLT completion
    for a in live:
        for c in range(enum.ncols):
            if enum.table[a][c] is None:
                raise CapExceeded("table not closed at cap %d" % cap)

    # canonical renumbering: BFS from coset 0 in generator order
    order = {live[0] if live[0] == enum.rep(0) else enum.rep(0): 0}
    order = {enum.rep(0): 0}
    words = {enum.rep(0): GroupWord()}
    frontier = [enum.rep(0)]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                for step in (1, -1):
                    b = enum.rep(enum.table[a][col[(g, step)]])
                    if b not in order:
                        order[b] = len(order)
                        words[b] = words[a] * GroupWord.gen(g, step)
                        nxt.append(b)
        frontier = nxt
    if len(order) != len(live):
        raise CapExceeded("coset graph is not connected")  # cannot happen

    index = len(live)
    action = {}
    for g in gens:
        c = col[(g, 1)]
        perm = [0] * index
        for a in live:
            perm[order[a]] = order[enum.rep(enum.table[a][c])]
        action[g] = tuple(perm)
    transversal = [None] * index
    for a in live:
        transversal[order[a]] = words[a]
    table = CosetTable(
        presentation=presentation,
        subgroup=tuple(subgroup),
        index=index,
        action=action,
        transversal=tuple(transversal),
    )
    if not table.validate():
        raise CapExceeded("enumeration produced an inconsistent table")
    return table
