"""Words in the fundamental-group basis x_0, x_1, ...

A word is a sequence of letters (generator index, sign).  Words record
edge crossings: crossing the unprimed side x_i outward contributes
(i, +1), crossing back through x_i' contributes (i, -1).
"""

from __future__ import annotations


class Word:
    __slots__ = ("letters",)

    def __init__(self, letters=()):
        ls = []
        for gen, sgn in letters:
            if sgn not in (1, -1):
                raise ValueError("letter sign must be +1 or -1")
            ls.append((int(gen), sgn))
        object.__setattr__(self, "letters", tuple(ls))

    def __setattr__(self, *a):
        raise AttributeError("Word is immutable")

    @staticmethod
    def generator(i: int, sgn: int = 1) -> Word:
        return Word(((i, sgn),))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k)

    def free_reduce(self) -> Word:
        out = []
        for letter in self.letters:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
        return Word(out)

    def cyclic_normal_form(self) -> tuple:
        """Smallest rotation of the letter tuple; invariant of the free
        homotopy class of a cyclically reduced word up to rotation."""
        ls = self.letters
        if not ls:
            return ()
        return min(tuple(ls[i:] + ls[:i]) for i in range(len(ls)))

    def to_json(self):
        return [[g, s] for g, s in self.letters]

    @staticmethod
    def from_json(data) -> Word:
        return Word(tuple((g, s) for g, s in data))

    def __repr__(self):
        if not self.letters:
            return "Word()"
        parts = []
        for g, s in self.letters:
            parts.append("x%d" % g if s > 0 else "x%d^-1" % g)
        return "Word(%s)" % "*".join(parts)
