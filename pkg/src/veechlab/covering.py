"""Finite covers Y_{n,d} of the base surfaces, defined by monodromy.

The monodromy is an anti-homomorphism from the fundamental group to
S_d: m(w1 * w2) = m(w2) o m(w1).  Evaluating a word therefore applies
the generator permutations in path order.  The cover is realized as an
explicit polygon complex (d copies of the base), so every cylinder
claim can be cross-validated by the generic tracer; the cycle-structure
shortcut predicts the same cylinders from the base decomposition alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import perms
from .errors import IntransitiveMonodromy
from .cylinders import Cylinder, Direction, decompose_retry
from .surface import EdgeRef, TranslationSurface, build_base
from .words import Word


def monodromy_indices(n: int) -> tuple[int, int]:
    """The two marked generators (k1, k2) of the covering family."""
    if n < 5 or n == 6:
        raise ValueError("n >= 5, n != 6")
    if n % 2:
        return (n - 1) // 2, (n + 1) // 2
    if n % 4 == 0:
        return n // 4 - 1, n // 4
    return (n - 2) // 4 - 1, (n - 2) // 4 + 1


def sigma_d1(d: int) -> tuple:
    """(0 1)(2 3)... up to d-2,d-1 (d even) or d-3,d-2 (d odd)."""
    top = d if d % 2 == 0 else d - 1
    return perms.from_cycles(d, [(i, i + 1) for i in range(0, top - 1, 2)])


def sigma_d2(d: int) -> tuple:
    """(1 2)(3 4)... with the extra pair (d-1 0) when d is even."""
    if d % 2 == 0:
        pairs = [(i, i + 1) for i in range(1, d - 2, 2)] + [(d - 1, 0)]
    else:
        pairs = [(i, i + 1) for i in range(1, d - 1, 2)]
    return perms.from_cycles(d, pairs)


class Monodromy:
    """Generator-indexed permutations of {0..d-1}.

    Transitivity of the image (connectedness of the cover) is checked
    when the cover is realized, not here, so that degenerate candidates
    can still be inspected.
    """

    def __init__(self, num_generators: int, degree: int, images: dict, k1=None, k2=None):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.num_generators = num_generators
        self.degree = degree
        self.images = {}
        ident = perms.identity(degree)
        for i in range(num_generators):
            p = tuple(images.get(i, ident))
            if sorted(p) != list(range(degree)):
                raise ValueError("image of x_%d is not a permutation" % i)
            self.images[i] = p
        self.k1 = k1
        self.k2 = k2

    def is_transitive(self) -> bool:
        return perms.is_transitive(list(self.images.values()), self.degree)

    def image(self, i: int) -> tuple:
        return self.images[i]

    def eval_word(self, w: Word) -> tuple:
        """Anti-homomorphic evaluation: letters act in path order."""
        cur = perms.identity(self.degree)
        for g, sgn in w:
            p = self.images[g]
            if sgn < 0:
                p = perms.inverse(p)
            cur = perms.compose(cur, p)
        return cur

    def to_json(self):
        data = {
            "degree": self.degree,
            "images": {
                str(i): list(p)
                for i, p in sorted(self.images.items())
                if p != perms.identity(self.degree)
            },
        }
        if self.k1 is not None:
            data["k1"] = self.k1
            data["k2"] = self.k2
        return data


def standard_monodromy(n: int, d: int) -> Monodromy:
    """The covering family's monodromy m_{n,d}."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    k1, k2 = monodromy_indices(n)
    num = n - 1 if n % 2 else n // 2
    return Monodromy(num, d, {k1: sigma_d1(d), k2: sigma_d2(d)}, k1=k1, k2=k2)


def eval_word(m: Monodromy, w: Word) -> tuple:
    return m.eval_word(w)


@dataclass
class CoveringSurface:
    base: TranslationSurface
    monodromy: Monodromy
    surface: TranslationSurface  # realized complex with d * |base polygons| faces
    n: int
    d: int

    def copy_of(self, polygon_index: int) -> tuple[int, int]:
        """(copy, base polygon) of a realized polygon index."""
        b = len(self.base.polygons)
        return polygon_index // b, polygon_index % b

    def realized_index(self, copy: int, base_polygon: int) -> int:
        return copy * len(self.base.polygons) + base_polygon

    def to_json(self):
        data = {"n": self.n, "d": self.d, "monodromy": self.monodromy.to_json()}
        m = self.monodromy
        if m.k1 is not None:
            data["k1"] = m.k1
            data["k2"] = m.k2
            data["sigma1"] = perms.cycles(m.image(m.k1), include_fixed=False)
            data["sigma2"] = perms.cycles(m.image(m.k2), include_fixed=False)
        return data


def build_cover(n: int, d: int, monodromy: Monodromy | None = None) -> CoveringSurface:
    """Realize the cover: edge x_i of copy j glues to x_i' of copy sigma_i(j)."""
    base = build_base(n)
    if monodromy is None:
        monodromy = standard_monodromy(n, d)
    if monodromy.degree != d:
        raise ValueError("monodromy degree disagrees with d")
    if not monodromy.is_transitive():
        raise IntransitiveMonodromy(
            "monodromy image is not transitive on %d sheets" % d
        )
    nb = len(base.polygons)
    polygons = []
    for _ in range(d):
        polygons.extend(base.polygons)
    gluing = {}
    labels = {}
    for src, dst in base.gluing.items():
        label = base.generator_labels.get(src)
        for c in range(d):
            src_ref = EdgeRef(c * nb + src.polygon, src.side)
            labels[src_ref] = label
            if label is None:
                target_copy = c
            else:
                g, sgn = label
                img = monodromy.image(g)
                target_copy = img[c] if sgn > 0 else perms.inverse(img)[c]
            gluing[src_ref] = EdgeRef(target_copy * nb + dst.polygon, dst.side)
    meta = dict(base.metadata)
    meta.update({"cover_degree": d})
    realized = TranslationSurface(polygons, gluing, labels, meta)
    return CoveringSurface(base=base, monodromy=monodromy, surface=realized, n=n, d=d)


@lru_cache(maxsize=None)
def _base_decomposition(n: int, key, l: int | None):
    # cache per (n, direction); key is the direction's canonical form
    base = build_base(n)
    direction = Direction.from_index(n, l)
    return tuple(decompose_retry(base, direction))


def base_decomposition(n: int, l: int):
    """Cached decomposition of X_n in direction v_l."""
    direction = Direction.from_index(n, l)
    return list(_base_decomposition(n, direction.key(), l))


def cover_cylinders(cover: CoveringSurface, direction_index: int):
    """Cover cylinders predicted from monodromy cycle structure.

    Every cycle of length a of m(core word) glues a copies of the base
    cylinder into one cover cylinder: height unchanged, circumference
    multiplied by a.  Must agree with decompose() run on the realized
    surface; the test suite checks exactly that.
    """
    out = []
    for cyl in base_decomposition(cover.n, direction_index):
        image = cover.monodromy.eval_word(cyl.core_word)
        for cyc in perms.cycles(image):
            a = len(cyc)
            out.append(
                Cylinder(
                    direction=cyl.direction,
                    height=cyl.height,
                    circumference=a * cyl.circumference,
                    inverse_modulus=a * cyl.inverse_modulus,
                    core_word=cyl.core_word ** a,
                )
            )
    return out
