"""Rank-one alcove walks on the integer line.

Alcoves are the unit intervals (i, i+1).  The wall at an even integer 2n
carries the label s1, the wall at an odd integer the label s0.  The group
element 2nX * s1^b occupies the alcove (2n-b, 2n-b+1); its translation part
is wt = n and d = b records which side the even wall lies on.

A walk starts in (0, 1).  Each step names a letter (s1 or s0), which selects
the wall of the current alcove carrying that label.  A crossing step moves
through that wall; a folding step stays put and the arrow bounces off the
wall, ending up pointing away from it.  A folding is positive when the
post-fold arrow points rightward.

Walks towards weight -n use the letter word (s1, s0, ..., s1, s0) of length
2n; walks towards +n use (s0, s1, ..., s1, s0) of length 2n-1.  Because the
words alternate, a crossing keeps the current arrow direction and a folding
reverses it, which is what the h-word encoding records.

The geometric traversal here is the ground truth for wt, d and folding
signs; the h-word combinatorics is derived from it and cross-checked in the
test suite.
"""

from dataclasses import dataclass
from itertools import product


class MalformedWalk(ValueError):
    pass


S0 = 0
S1 = 1


def walk_word(target):
    """Letter word for the walk toward weight `target` (nonzero integer)."""
    if target == 0:
        raise ValueError("no walk word for target 0")
    if target < 0:
        return (S1, S0) * (-target)
    return ((S0,) + (S1, S0) * (target - 1))[: 2 * target - 1]


@dataclass(frozen=True)
class AlcoveElement:
    """The group element 2nX * s1^b, sitting in the alcove (2n-b, 2n-b+1)."""

    n: int
    b: int

    @classmethod
    def from_interval(cls, lo):
        if lo % 2 == 0:
            return cls(lo // 2, 0)
        return cls((lo + 1) // 2, 1)

    @property
    def wt(self):
        return self.n

    @property
    def d(self):
        return self.b

    @property
    def lo(self):
        return 2 * self.n - self.b


@dataclass(frozen=True)
class AlcoveWalk:
    word: tuple
    mask: tuple  # 1 = crossing, 0 = folding

    def __post_init__(self):
        if len(self.word) != len(self.mask):
            raise MalformedWalk("mask length differs from word length")

    @property
    def length(self):
        return len(self.word)

    def mask_string(self):
        return "".join(str(b) for b in self.mask)


@dataclass(frozen=True)
class WalkStats:
    final: AlcoveElement
    J0_pos: frozenset
    J0_neg: frozenset
    J_pos: frozenset
    J_neg: frozenset
    arrows: tuple  # per-step final direction, +1 right / -1 left

    @property
    def J(self):
        return self.J0_pos | self.J0_neg | self.J_pos | self.J_neg

    @property
    def folds(self):
        return sorted(self.J)


def _wall_of(lo, letter):
    # Wall of the alcove (lo, lo+1) carrying the requested label:
    # even endpoint for s1, odd endpoint for s0.
    if letter == S1:
        return lo if lo % 2 == 0 else lo + 1
    return lo if lo % 2 != 0 else lo + 1


def traverse(walk):
    """Run a walk from the alcove (0, 1) and classify its foldings."""
    lo = 0
    j0p, j0n, jp, jn = set(), set(), set(), set()
    arrows = []
    for i, (letter, bit) in enumerate(zip(walk.word, walk.mask), start=1):
        if letter not in (S0, S1):
            raise MalformedWalk("unknown letter %r at step %d" % (letter, i))
        wall = _wall_of(lo, letter)
        if bit:
            if wall == lo:
                lo -= 1
                arrows.append(-1)
            else:
                lo += 1
                arrows.append(+1)
        else:
            # Bounce: the arrow ends pointing away from the attempted wall.
            positive = wall == lo
            arrows.append(+1 if positive else -1)
            target = j0p if letter == S0 else jp
            if not positive:
                target = j0n if letter == S0 else jn
            target.add(i)
    return WalkStats(
        final=AlcoveElement.from_interval(lo),
        J0_pos=frozenset(j0p),
        J0_neg=frozenset(j0n),
        J_pos=frozenset(jp),
        J_neg=frozenset(jn),
        arrows=tuple(arrows),
    )


def to_hword(walk, target_sign):
    """Direction word (h_0, ..., h_l): 1 = rightward, 2 = leftward.

    h_0 is fixed by the sign of the target weight; a crossing keeps the
    previous direction and a folding flips it.
    """
    if target_sign not in (1, -1):
        raise ValueError("target_sign must be +1 or -1")
    h = [1 if target_sign > 0 else 2]
    for bit in walk.mask:
        prev = h[-1]
        h.append(prev if bit else 3 - prev)
    return tuple(h)


def x_weight(h):
    """floor((#{i>0: h_i=1} - #{i>0: h_i=2} + 1) / 2)."""
    ones = sum(1 for v in h[1:] if v == 1)
    twos = len(h) - 1 - ones
    return (ones - twos + 1) // 2


def leg(h):
    """Descent statistic: sum of j over pairs h[l-j]=1, h[l-j+1]=2."""
    l = len(h) - 1
    return sum(j for j in range(1, l + 1) if h[l - j] == 1 and h[l - j + 1] == 2)


def legprime(h):
    """Literal ascent statistic: sum of j over h[l-j]=1, h[l-j-1]=2.

    The index set starts at j = 0, so an ascent at the last step contributes
    nothing; see legprime_shifted for the variant that weights every ascent
    by its full wall depth.
    """
    l = len(h) - 1
    return sum(j for j in range(0, l) if h[l - j] == 1 and h[l - j - 1] == 2)


def legprime_shifted(h):
    """Ascent statistic with every index shifted up by one."""
    l = len(h) - 1
    return sum(j + 1 for j in range(0, l) if h[l - j] == 1 and h[l - j - 1] == 2)


def beta_degree(j, l):
    """Affine degree of the root crossed at step j of a length-l word."""
    if not 1 <= j <= l:
        raise ValueError("step index out of range")
    return l - j + 1


def enumerate_walks(target):
    """All 2^l walks for the target weight, in lexicographic mask order."""
    word = walk_word(target)
    return [AlcoveWalk(word, mask) for mask in product((0, 1), repeat=len(word))]


FAMILIES = ("A2", "A2dagger")
SPECS = ("t0", "tinf")

# Which set of s0-foldings kills a walk in each specialization.
_CUT_SET = {
    ("A2", "t0"): "J0_pos",
    ("A2", "tinf"): "J0_neg",
    ("A2dagger", "t0"): "J0_neg",
    ("A2dagger", "tinf"): "J0_pos",
}


def normalize_spec(spec):
    if spec in ("tinf", "tinf_qinv"):
        return "tinf"
    if spec == "t0":
        return "t0"
    raise ValueError("unknown specialization %r" % (spec,))


def surviving(stats, family, spec):
    """True when the walk contributes to the given specialization."""
    cut = _CUT_SET[(family, normalize_spec(spec))]
    return not getattr(stats, cut)


def qb_filter(walks, family, spec):
    """Walks whose term survives the t=0 or t=infinity limit."""
    if family not in FAMILIES:
        raise ValueError("unknown family %r" % (family,))
    return [w for w in walks if surviving(traverse(w), family, spec)]


def walk_record(walk, target):
    """JSON-ready dict describing one walk (used by the CLI)."""
    stats = traverse(walk)
    h = to_hword(walk, 1 if target > 0 else -1)
    return {
        "mask": walk.mask_string(),
        "wt": stats.final.wt,
        "d": stats.final.d,
        "J0+": sorted(stats.J0_pos),
        "J0-": sorted(stats.J0_neg),
        "J+": sorted(stats.J_pos),
        "J-": sorted(stats.J_neg),
        "h": "".join(str(v) for v in h),
        "leg": leg(h),
    }
