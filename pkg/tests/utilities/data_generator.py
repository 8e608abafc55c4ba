from functools import lru_cache
from typing import List, Tuple
from mimesis.random import Random
from GroupShifts.finite_group import FiniteGroup, all_subgroups, cyclic_group, direct_power, direct_product, \
    from_permutations, symmetric_group
from GroupShifts.group_shift import GroupShift, equals, from_generators, from_window

# Dihedral group of the square as a permutation group
D4_GENERATORS = [[1, 2, 3, 0], [3, 2, 1, 0]]

# Quaternion group in its left regular representation: i and j
Q8_GENERATORS = [[2, 3, 1, 0, 6, 7, 5, 4], [4, 5, 7, 6, 1, 0, 2, 3]]

# Alphabets whose width-1 shifts are sampled rather than enumerated
SAMPLED_ALPHABETS = {"C2xC2xC2"}


def small_alphabets() -> List[FiniteGroup]:
    """
    Every group of order 2 to 8, up to isomorphism.
    """
    return [
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        direct_product(cyclic_group(2), cyclic_group(2), name="C2xC2"),
        cyclic_group(5),
        cyclic_group(6),
        symmetric_group(3),
        cyclic_group(7),
        cyclic_group(8),
        direct_product(cyclic_group(2), cyclic_group(4), name="C2xC4"),
        direct_product(cyclic_group(2), cyclic_group(2), cyclic_group(2), name="C2xC2xC2"),
        from_permutations(D4_GENERATORS, name="D4"),
        from_permutations(Q8_GENERATORS, name="Q8")
    ]


def random_shift(generator: Random, alphabet: FiniteGroup, width: int = 1) -> GroupShift:
    """
    A window shift generated by one to three random words.
    """
    words = []
    for _ in range(generator.randint(1, 3)):
        words.append(tuple(generator.randint(0, alphabet.order - 1) for _ in range(width + 1)))
    return from_generators(alphabet, width, words)


def _deduplicate(shifts: List[GroupShift]) -> List[GroupShift]:
    unique = []  # type: List[GroupShift]
    for shift in shifts:
        if not any(shift.alphabet is other.alphabet and equals(shift, other) for other in unique):
            unique.append(shift)
    return unique


def generate_corpus(size: int = 24, seed: int = 1729) -> List[GroupShift]:
    """
    Seeded corpus of trimmed width-1 shifts on groups of order at most 8, deduplicated.
    """
    generator = Random(seed)
    alphabets = small_alphabets()
    shifts = [random_shift(generator, generator.choice(alphabets)) for _ in range(size)]
    return _deduplicate(shifts)


def exhaustive_width_one(alphabet: FiniteGroup) -> List[GroupShift]:
    """
    Every width-1 shift on ``alphabet``: one per subgroup of alphabet x alphabet, deduplicated.
    """
    power = direct_power(alphabet, 2)
    return _deduplicate([from_window(alphabet, 1, window) for window in all_subgroups(power)])


def sampled_width_one(alphabet: FiniteGroup, size: int = 48, seed: int = 1729) -> List[GroupShift]:
    generator = Random(seed)
    return _deduplicate([random_shift(generator, alphabet) for _ in range(size)])


@lru_cache(maxsize=None)
def acceptance_corpus() -> Tuple[GroupShift, ...]:
    """
    The seeded random corpus plus every width-1 shift on each group of order at most 8; the subgroups of
    (C2xC2xC2)^2 are too many to walk, so that alphabet contributes a seeded sample.
    """
    shifts = generate_corpus()
    for alphabet in small_alphabets():
        if alphabet.name in SAMPLED_ALPHABETS:
            shifts += sampled_width_one(alphabet)
        else:
            shifts += exhaustive_width_one(alphabet)
    return tuple(shifts)
