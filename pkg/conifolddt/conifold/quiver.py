"""Conifold quiver with potential, cut and roots"""
from ..series import DimVec


__all__ = ["CONIFOLD", "QuiverData", "Root", "REAL", "IMAGINARY",
           "roots_up_to"]

#: root kinds
REAL = "real"
IMAGINARY = "imaginary"


class Root(object):
    """Positive root of the conifold quiver

    Real roots are (i, i-1) and (i-1, i), imaginary roots are (i, i),
    for i >= 1.
    """
    __slots__ = ("vec", "kind")

    def __init__(self, vec, kind=None):
        vec = DimVec(*vec)
        if kind is None:
            kind = IMAGINARY if vec.a0 == vec.a1 else REAL
        if kind == IMAGINARY:
            valid = vec.a0 == vec.a1 and vec.a0 >= 1
        elif kind == REAL:
            valid = abs(vec.a0 - vec.a1) == 1
        else:
            raise ValueError("Unknown root kind '{}'!".format(kind))
        if not valid:
            raise ValueError("{} is not a {} root!".format(tuple(vec), kind))
        #: dimension vector
        self.vec = vec
        #: "real" or "imaginary"
        self.kind = kind

    def __eq__(self, other):
        if not isinstance(other, Root):
            return NotImplemented
        return self.vec == other.vec and self.kind == other.kind

    def __hash__(self):
        return hash((self.vec, self.kind))

    def __repr__(self):
        return "Root({}, {})".format(tuple(self.vec), self.kind)

    @property
    def is_real(self):
        return self.kind == REAL

    @property
    def size(self):
        return self.vec.a0 + self.vec.a1


def roots_up_to(bound):
    """All positive roots with total degree <= bound"""
    if bound < 1:
        raise ValueError("`bound` must be at least 1, got {}!".format(bound))
    roots = []
    i = 1
    while 2 * i - 1 <= bound:
        roots.append(Root((i, i - 1), REAL))
        roots.append(Root((i - 1, i), REAL))
        if 2 * i <= bound:
            roots.append(Root((i, i), IMAGINARY))
        i += 1
    return sorted(roots, key=lambda r: (r.size, -r.vec.a0))


class QuiverData(object):
    """Quiver with potential and cut

    Parameters
    ----------
    vertices: tuple of int
        vertex labels 0, 1, ...
    arrows: dict
        arrow name -> (source, target)
    potential: list
        terms (coefficient, word) of the potential; a word is a
        tuple of arrow names forming a cycle
    cut: set
        arrow names of the cut
    """
    def __init__(self, vertices, arrows, potential, cut):
        self.vertices = tuple(vertices)
        self.arrows = dict(arrows)
        self.potential = [(c, tuple(w)) for c, w in potential]
        self.cut = frozenset(cut)
        for _, word in self.potential:
            if not self.is_cycle(word):
                raise ValueError("Potential term {} is not a cycle!".format(
                    word))
        if not self.cut <= set(self.arrows):
            raise ValueError("Cut {} contains unknown arrows!".format(
                sorted(self.cut)))

    def __repr__(self):
        return "<{}: {} vertices, {} arrows at {}>".format(
            self.__class__.__name__, len(self.vertices), len(self.arrows),
            hex(id(self)))

    def is_cycle(self, word):
        for first, second in zip(word, word[1:] + word[:1]):
            if self.arrows[first][1] != self.arrows[second][0]:
                return False
        return True

    def cut_degree(self, word):
        """Number of cut arrows in a path"""
        return sum(1 for arrow in word if arrow in self.cut)

    def is_cut(self):
        """True if the potential is homogeneous of degree 1 for the cut"""
        return all(self.cut_degree(w) == 1 for _, w in self.potential)

    def euler_form(self, a, b):
        chi = sum(a[v] * b[v] for v in self.vertices)
        for source, target in self.arrows.values():
            chi -= a[source] * b[target]
        return chi

    def skew_form(self, a, b):
        return self.euler_form(a, b) - self.euler_form(b, a)

    def cut_dimension(self, a):
        """d_I(a) = sum over cut arrows of a_source * a_target"""
        return sum(a[self.arrows[arrow][0]] * a[self.arrows[arrow][1]]
                   for arrow in self.cut)


#: conifold quiver with W = a1 b1 a2 b2 - a1 b2 a2 b1 and cut {a1}
CONIFOLD = QuiverData(
    vertices=(0, 1),
    arrows={"a1": (0, 1), "a2": (0, 1), "b1": (1, 0), "b2": (1, 0)},
    potential=[(1, ("a1", "b1", "a2", "b2")),
               (-1, ("a1", "b2", "a2", "b1"))],
    cut={"a1"},
)
