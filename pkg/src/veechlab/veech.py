"""Exact 2x2 matrix layer: R_n, T_n, group words and presentations.

R_n rotates by pi/n and T_n shears by lambda_n = 2 cot(pi/n).  For odd
n the group they generate is presented by {(T^-1 R)^2 = R^n, R^2n = I,
R^n T = T R^n}; for even n the Veech group of the base is <R^2, T>, a
(n/2, inf, inf) triangle group, presented here on generators r = R^2,
t = T, z = R^n = -I with relators r^(n/2) z^-1, z^2 and z central.  All
relators are verified against the exact matrices at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import RealAlg, cos_pi_over, lambda_n, quarter_trig, sin_pi_over


class Mat2:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: RealAlg, b: RealAlg, c: RealAlg, d: RealAlg):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *x):
        raise AttributeError("Mat2 is immutable")

    @staticmethod
    def identity(N: int) -> Mat2:
        one, zero = RealAlg.one(N), RealAlg.zero(N)
        return Mat2(one, zero, zero, one)

    def __mul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> RealAlg:
        return self.a * self.d - self.b * self.c

    def trace(self) -> RealAlg:
        return self.a + self.d

    def inverse(self) -> Mat2:
        det = self.det()
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def __pow__(self, k: int) -> Mat2:
        if k < 0:
            return self.inverse() ** (-k)
        out = Mat2.identity(self.a.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return (
            self.a == other.a and self.b == other.b and self.c == other.c and self.d == other.d
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def is_identity(self) -> bool:
        return self == Mat2.identity(self.a.N)

    def key(self):
        return (self.a.key(), self.b.key(), self.c.key(), self.d.key())

    def apply(self, v):
        from .planar import Vec2

        return Vec2(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def to_json(self):
        return [[self.a.to_json(), self.b.to_json()], [self.c.to_json(), self.d.to_json()]]

    def __repr__(self):
        return "Mat2[[%s, %s], [%s, %s]]" % tuple(
            x.approx(8).strip() for x in (self.a, self.b, self.c, self.d)
        )


def gen_R(n: int) -> Mat2:
    """Rotation by pi/n."""
    c, s = cos_pi_over(n), sin_pi_over(n)
    return Mat2(c, -s, s, c)


def gen_T(n: int) -> Mat2:
    """Horizontal shear by lambda_n = 2 cot(pi/n)."""
    N = 4 * n
    one, zero = RealAlg.one(N), RealAlg.zero(N)
    return Mat2(one, lambda_n(n), zero, one)


def minus_identity(n: int) -> Mat2:
    return -Mat2.identity(4 * n)


# ---------------------------------------------------------------------------
# group words


class GroupWord:
    """A word over named generators with integer exponents, kept reduced."""

    __slots__ = ("syllables",)

    def __init__(self, syllables=()):
        merged = []
        for sym, exp in syllables:
            exp = int(exp)
            if exp == 0:
                continue
            if merged and merged[-1][0] == sym:
                total = merged[-1][1] + exp
                merged.pop()
                if total:
                    merged.append((sym, total))
            else:
                merged.append((sym, exp))
        object.__setattr__(self, "syllables", tuple(merged))

    def __setattr__(self, *a):
        raise AttributeError("GroupWord is immutable")

    @staticmethod
    def gen(sym: str, exp: int = 1) -> GroupWord:
        return GroupWord(((sym, exp),))

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.syllables + other.syllables)

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((s, -e) for s, e in reversed(self.syllables)))

    def __pow__(self, k: int) -> GroupWord:
        if k < 0:
            return self.inverse() ** (-k)
        out = GroupWord()
        for _ in range(k):
            out = out * self
        return out

    def conjugate_by(self, g: GroupWord) -> GroupWord:
        """g * self * g^-1."""
        return g * self * g.inverse()

    def letters(self):
        """Flat sequence of (symbol, +-1)."""
        for sym, exp in self.syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield (sym, step)

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    def __eq__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def __str__(self):
        if not self.syllables:
            return "1"
        parts = []
        for sym, exp in self.syllables:
            parts.append(sym if exp == 1 else "%s^%d" % (sym, exp))
        return "*".join(parts)

    def __repr__(self):
        return "GroupWord(%s)" % self

    def to_json(self):
        return str(self)

    @staticmethod
    def parse(text: str) -> GroupWord:
        text = text.strip()
        if text in ("", "1"):
            return GroupWord()
        sylls = []
        for part in text.split("*"):
            if "^" in part:
                sym, exp = part.split("^")
                sylls.append((sym.strip(), int(exp)))
            else:
                sylls.append((part.strip(), 1))
        return GroupWord(sylls)


def eval_group_word(n: int, word: GroupWord, images: dict | None = None) -> Mat2:
    """Evaluate a word left-to-right under the exact representation."""
    if images is None:
        images = {"R": gen_R(n), "T": gen_T(n)}
    out = Mat2.identity(4 * n)
    for sym, step in word.letters():
        m = images[sym]
        out = out * (m if step > 0 else m.inverse())
    return out


def shear_matrix(n: int, l: int) -> Mat2:
    """R^l T^2 R^-l: the shear with factor 2*lambda_n in direction v_l."""
    R, T = gen_R(n), gen_T(n)
    return (R ** l) * (T * T) * (R ** (-l))


def shear_matrix_closed_form(n: int, l: int) -> Mat2:
    """The displayed entries of the same shear, as an independent oracle."""
    c, s = quarter_trig(n, 2 * l)
    lam = lambda_n(n)
    one = RealAlg.one(4 * n)
    return Mat2(
        one - 2 * lam * c * s,
        2 * lam * c * c,
        -2 * lam * s * s,
        one + 2 * lam * c * s,
    )


# ---------------------------------------------------------------------------
# the Veech group generators of the covering family (Theorem statement lists)


def gamma_generator_words(n: int) -> list[GroupWord]:
    """Generating words of the covers' common Veech group, over {R, T}."""
    R, T = GroupWord.gen("R"), GroupWord.gen("T")
    if n % 2:
        gens = [GroupWord.gen("R", n), T]  # R^n = -I, T
        for j in range(1, (n - 1) // 2 + 1):
            gens.append((T * T).conjugate_by(GroupWord.gen("R", j)))
        return gens
    u = (T.inverse() * GroupWord.gen("R", 2)) ** 2
    gens = [GroupWord.gen("R", n), T]
    for j in range(1, (n - 2) // 2 + 1):
        gens.append((T * T).conjugate_by(GroupWord.gen("R", 2 * j)))
    gens.append(u)
    for j in range(1, (n - 2) // 2 + 1):
        gens.append(u.conjugate_by(GroupWord.gen("R", 2 * j)))
    return gens


def gamma_generators(n: int) -> list[tuple[GroupWord, Mat2]]:
    """The covers' Veech-group generators with exact matrix values."""
    return [(w, eval_group_word(n, w)) for w in gamma_generator_words(n)]


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    """Finite presentation with a faithful exact matrix assignment.

    Every relator is verified to evaluate to the identity matrix at
    construction time.
    """

    n: int
    generators: tuple
    relators: tuple
    images: dict
    parabolic_classes: tuple  # (name, GroupWord) generating each cusp stabilizer
    elliptic_classes: tuple  # (order, name, GroupWord)
    chi_orb_str: str  # orbifold Euler characteristic of the presented group, "p/q"

    def __post_init__(self):
        for rel in self.relators:
            if not eval_group_word(self.n, rel, self.images).is_identity():
                raise VerificationError("relator %s does not hold" % rel)

    def to_json(self):
        return {
            "n": self.n,
            "generators": list(self.generators),
            "relators": [str(r) for r in self.relators],
            "chi_orb": self.chi_orb_str,
        }


class VerificationError(ValueError):
    pass


def presentation_for(n: int) -> Presentation:
    if n < 5 or n == 6:
        raise ValueError("n >= 5, n != 6")
    if n % 2:
        R, T = GroupWord.gen("R"), GroupWord.gen("T")
        relators = (
            GroupWord.gen("R", n) * ((T.inverse() * R) ** 2).inverse(),
            GroupWord.gen("R", 2 * n),
            GroupWord.gen("R", n) * T * GroupWord.gen("R", -n) * T.inverse(),
        )
        return Presentation(
            n=n,
            generators=("R", "T"),
            relators=relators,
            images={"R": gen_R(n), "T": gen_T(n)},
            parabolic_classes=(("T", T),),
            elliptic_classes=((2, "T^-1*R", T.inverse() * R), (n, "R", R)),
            chi_orb_str="%d/%d" % (2 + n - 2 * n, 2 * n),  # 1/2 + 1/n - 1
        )
    r, t, z = GroupWord.gen("r"), GroupWord.gen("t"), GroupWord.gen("z")
    relators = (
        GroupWord.gen("r", n // 2) * z.inverse(),
        z * z,
        z * r * z.inverse() * r.inverse(),
        z * t * z.inverse() * t.inverse(),
    )
    R = gen_R(n)
    images = {"r": R * R, "t": gen_T(n), "z": minus_identity(n)}
    # primitive parabolic at the second cusp: R^-1 T R = R^n T^-1 R^2 = z t^-1 r
    p2 = z * t.inverse() * r
    return Presentation(
        n=n,
        generators=("r", "t", "z"),
        relators=relators,
        images=images,
        parabolic_classes=(("t", t), ("z*t^-1*r", p2)),
        elliptic_classes=((n // 2, "r", r),),
        chi_orb_str="%d/%d" % (2 - n, n),  # 2/n - 1
    )


def subgroup_words(n: int) -> list[GroupWord]:
    """The covers' Veech-group generators over the presentation's alphabet."""
    if n % 2:
        return gamma_generator_words(n)
    r, t, z = GroupWord.gen("r"), GroupWord.gen("t"), GroupWord.gen("z")
    u = (t.inverse() * r) ** 2
    gens = [z, t]
    for j in range(1, (n - 2) // 2 + 1):
        gens.append((t * t).conjugate_by(GroupWord.gen("r", j)))
    gens.append(u)
    for j in range(1, (n - 2) // 2 + 1):
        gens.append(u.conjugate_by(GroupWord.gen("r", j)))
    return gens
