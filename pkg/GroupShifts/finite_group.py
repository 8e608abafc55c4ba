from collections import Counter, deque
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple
from sympy import factorint
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup
from GroupShifts.constants import DEFAULT_SIZE_BUDGET
from GroupShifts.exceptions import ContainmentError, InvalidGroupError, NotNormalError, PreconditionError
from GroupShifts.utils import LOGGER, check_budget, sequence_fingerprint


class FiniteGroup():
    """
    A finite group on the dense element indices ``0..order-1``, identity pinned at 0.

    Subclasses that never materialize a Cayley table override ``mul``, ``inv`` and ``label``.
    """
    identity = 0

    def __init__(self,
                 mul_table: Sequence[Sequence[int]],
                 inv_table: Sequence[int] = None,
                 labels: Sequence[str] = None,
                 name: str = None) -> None:
        """
        :param mul_table: order x order table of element indices.
        :param inv_table: Inverse of every element; derived from mul_table when omitted.
        :param labels: Element names, defaults to the decimal index.
        :param name: Display name.
        """
        self.order = len(mul_table)
        if self.order == 0:
            raise InvalidGroupError("A group needs at least its identity element")

        for row in mul_table:
            if len(row) != self.order or any(not 0 <= entry < self.order for entry in row):
                raise InvalidGroupError("Every Cayley table row needs {} valid element indices".format(self.order))

        self._mul = [list(row) for row in mul_table]

        if inv_table is None:
            inv_table = []
            for element in range(self.order):
                inverse = [y for y in range(self.order) if self._mul[element][y] == 0]
                if len(inverse) != 1:
                    raise InvalidGroupError("Element {} has no unique inverse".format(element))
                inv_table.append(inverse[0])
        self._inv = list(inv_table)

        if labels is not None and len(set(labels)) != self.order:
            raise InvalidGroupError("Element labels must be unique and cover the group")
        self._labels = [str(x) for x in labels] if labels is not None else None
        self.name = name
        self._generators = None  # type: Optional[List[int]]
        self._key = None  # type: Optional[tuple]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def label(self, a: int) -> str:
        if self._labels is None:
            return str(a)
        return self._labels[a]

    @property
    def labels(self) -> List[str]:
        return [self.label(x) for x in range(self.order)]

    def elements(self) -> range:
        return range(self.order)

    def conjugate(self, t: int, x: int) -> int:
        return self.mul(self.mul(t, x), self.inv(t))

    def power(self, x: int, exponent: int) -> int:
        result = 0
        for _ in range(exponent):
            result = self.mul(result, x)
        return result

    @property
    def generators(self) -> List[int]:
        """
        Greedy generating set: scan elements in index order, keep those outside the current closure.
        """
        if self._generators is None:
            self._generators = _greedy_generators(self, range(self.order))
        return self._generators

    def cayley_table(self) -> List[List[int]]:
        return [[self.mul(a, b) for b in range(self.order)] for a in range(self.order)]

    def verify(self) -> None:
        """
        Checks the group axioms in O(order^3); raises InvalidGroupError on the first violation.
        """
        for g in range(self.order):
            if self.mul(0, g) != g or self.mul(g, 0) != g:
                raise InvalidGroupError("Index 0 is not an identity for {}".format(self.label(g)))
            if self.mul(g, self.inv(g)) != 0:
                raise InvalidGroupError("Inverse table is wrong at {}".format(self.label(g)))
        for a in range(self.order):
            for b in range(self.order):
                ab = self.mul(a, b)
                for c in range(self.order):
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)):
                        raise InvalidGroupError("Multiplication is not associative")

    def structure_key(self) -> tuple:
        if self._key is None:
            self._key = ("table", self.order, sequence_fingerprint(x for row in self._mul for x in row))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return False
        if self is other:
            return True
        if self.order != other.order:
            return False
        # structure keys are 32 bit hashes; right multiplication by the generators pins the whole table
        return all(self.mul(x, g) == other.mul(x, g) for g in self.generators for x in range(self.order))

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return "<{} {} of order {}>".format(type(self).__name__, self.name or "", self.order)


class DirectPower(FiniteGroup):
    """
    base^k with mixed-radix, big-endian encoding of coordinate tuples.
    """
    # pylint: disable=super-init-not-called
    def __init__(self, base: FiniteGroup, exponent: int) -> None:
        if exponent < 1:
            raise PreconditionError("Direct powers need a positive exponent")
        self.base = base
        self.exponent = exponent
        self.order = base.order ** exponent
        self.name = "{}^{}".format(base.name or "G", exponent)
        self._generators = None
        self._key = None

    def encode(self, word: Sequence[int]) -> int:
        index = 0
        for letter in word:
            index = index * self.base.order + letter
        return index

    def decode(self, index: int) -> Tuple[int, ...]:
        word = [0] * self.exponent
        for position in range(self.exponent - 1, -1, -1):
            index, word[position] = divmod(index, self.base.order)
        return tuple(word)

    def mul(self, a: int, b: int) -> int:
        return self.encode([self.base.mul(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def inv(self, a: int) -> int:
        return self.encode([self.base.inv(x) for x in self.decode(a)])

    def label(self, a: int) -> str:
        return "(" + ",".join(self.base.label(x) for x in self.decode(a)) + ")"

    @property
    def generators(self) -> List[int]:
        if self._generators is None:
            gens = []
            for position in range(self.exponent):
                for g in self.base.generators:
                    word = [0] * self.exponent
                    word[position] = g
                    gens.append(self.encode(word))
            self._generators = gens
        return self._generators

    def structure_key(self) -> tuple:
        if self._key is None:
            self._key = ("power", self.base.structure_key(), self.exponent)
        return self._key


class DirectProduct(FiniteGroup):
    # pylint: disable=super-init-not-called
    def __init__(self, factors: Sequence[FiniteGroup], name: str = None) -> None:
        self.factors = list(factors)
        self.order = 1
        for factor in self.factors:
            self.order *= factor.order
        self.name = name or "x".join(f.name or "G" for f in self.factors)
        self._generators = None
        self._key = None

    def encode(self, word: Sequence[int]) -> int:
        index = 0
        for factor, letter in zip(self.factors, word):
            index = index * factor.order + letter
        return index

    def decode(self, index: int) -> Tuple[int, ...]:
        word = [0] * len(self.factors)
        for position in range(len(self.factors) - 1, -1, -1):
            index, word[position] = divmod(index, self.factors[position].order)
        return tuple(word)

    def mul(self, a: int, b: int) -> int:
        return self.encode([f.mul(x, y) for f, x, y in zip(self.factors, self.decode(a), self.decode(b))])

    def inv(self, a: int) -> int:
        return self.encode([f.inv(x) for f, x in zip(self.factors, self.decode(a))])

    def label(self, a: int) -> str:
        return "(" + ",".join(f.label(x) for f, x in zip(self.factors, self.decode(a))) + ")"

    @property
    def generators(self) -> List[int]:
        if self._generators is None:
            gens = []
            for position, factor in enumerate(self.factors):
                for g in factor.generators:
                    word = [0] * len(self.factors)
                    word[position] = g
                    gens.append(self.encode(word))
            self._generators = gens
        return self._generators

    def structure_key(self) -> tuple:
        if self._key is None:
            self._key = ("product",) + tuple(f.structure_key() for f in self.factors)
        return self._key


class Subgroup():
    """
    Subgroup of ``parent`` held as a sorted tuple of parent indices.

    :param parent: Ambient group.
    :param generators: Generators; the elements are their closure.
    :param elements: Known element list (must already be a subgroup); generators are then derived lazily.
    """
    def __init__(self,
                 parent: FiniteGroup,
                 generators: Iterable[int] = None,
                 elements: Iterable[int] = None,
                 budget: int = DEFAULT_SIZE_BUDGET) -> None:
        self.parent = parent

        if elements is not None:
            self.elements = tuple(sorted(set(elements)))
            self._generators = list(generators) if generators is not None else None
        else:
            gens = list(generators or [])
            for g in gens:
                if not 0 <= g < parent.order:
                    raise InvalidGroupError("Element index {} out of range for order {}".format(g, parent.order))
            self.elements = tuple(sorted(_closure_set(parent, gens, budget)))
            self._generators = [g for g in gens if g != 0]

        self.members = frozenset(self.elements)
        self.order = len(self.elements)
        self._position = None  # type: Optional[Dict[int, int]]

    @property
    def generators(self) -> List[int]:
        if self._generators is None:
            self._generators = _greedy_generators(self.parent, self.elements)
        return self._generators

    def __contains__(self, element: int) -> bool:
        return element in self.members

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent == other.parent and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return "<Subgroup of order {} in {!r}>".format(self.order, self.parent)

    def issubset(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def local(self, element: int) -> int:
        """
        Position of a parent element inside ``elements``; this is its index in ``as_group()``.
        """
        if self._position is None:
            self._position = {x: i for i, x in enumerate(self.elements)}
        return self._position[element]

    def as_group(self) -> "InducedGroup":
        return InducedGroup(self)


class InducedGroup(FiniteGroup):
    """
    A subgroup turned into a group of its own, relabelled densely; index i is ``subgroup.elements[i]``.
    """
    # pylint: disable=super-init-not-called
    def __init__(self, subgroup: Subgroup) -> None:
        self.subgroup = subgroup
        self.order = subgroup.order
        self.name = None
        self._generators = None
        self._key = None

    def lift(self, a: int) -> int:
        return self.subgroup.elements[a]

    def local(self, element: int) -> int:
        return self.subgroup.local(element)

    def mul(self, a: int, b: int) -> int:
        return self.subgroup.local(self.subgroup.parent.mul(self.lift(a), self.lift(b)))

    def inv(self, a: int) -> int:
        return self.subgroup.local(self.subgroup.parent.inv(self.lift(a)))

    def label(self, a: int) -> str:
        return self.subgroup.parent.label(self.lift(a))

    @property
    def generators(self) -> List[int]:
        if self._generators is None:
            self._generators = [self.local(g) for g in self.subgroup.generators]
        return self._generators

    def structure_key(self) -> tuple:
        if self._key is None:
            self._key = ("induced", self.subgroup.parent.structure_key(),
                         sequence_fingerprint(self.subgroup.elements), self.order)
        return self._key


class GroupHom():
    def __init__(self,
                 source: FiniteGroup,
                 target: FiniteGroup,
                 image_table: Sequence[int]) -> None:
        """
        A homomorphism given by the image of every source element.

        :param source: Domain.
        :param target: Codomain.
        :param image_table: ``image_table[x]`` is the image of source element x.
        """
        if len(image_table) != source.order:
            raise InvalidGroupError("Image table must cover the whole source group")
        self.source = source
        self.target = target
        self.image_table = list(image_table)

    @classmethod
    def from_function(cls,
                      source: FiniteGroup,
                      target: FiniteGroup,
                      function: Callable[[int], int]) -> "GroupHom":
        return cls(source, target, [function(x) for x in range(source.order)])

    def __call__(self, element: int) -> int:
        return self.image_table[element]

    def is_homomorphism(self) -> bool:
        if self.image_table[0] != 0:
            return False
        for a in range(self.source.order):
            for g in self.source.generators:
                if self(self.source.mul(a, g)) != self.target.mul(self(a), self(g)):
                    return False
        return True

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, elements=[x for x in range(self.source.order) if self.image_table[x] == 0])

    def image(self) -> Subgroup:
        return Subgroup(self.target, elements=set(self.image_table))

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.image_table)) == self.target.order


def _closure_set(parent: FiniteGroup,
                 generators: Sequence[int],
                 budget: int = DEFAULT_SIZE_BUDGET,
                 seed: Iterable[int] = (0,)) -> set:
    found = set(seed)
    found.add(0)
    queue = deque(found)
    gens = [g for g in set(generators) if g != 0]
    while queue:
        x = queue.popleft()
        for g in gens:
            y = parent.mul(x, g)
            if y not in found:
                found.add(y)
                queue.append(y)
        if len(found) > budget:
            check_budget("subgroup closure", len(found), budget)
    return found


def _greedy_generators(parent: FiniteGroup, elements: Iterable[int]) -> List[int]:
    gens = []  # type: List[int]
    reached = {0}
    for x in elements:
        if x not in reached:
            gens.append(x)
            reached = _closure_set(parent, gens, seed=reached)
    return gens


def closure(parent: FiniteGroup,
            generators: Iterable[int],
            budget: int = DEFAULT_SIZE_BUDGET) -> Subgroup:
    """
    Smallest subgroup of ``parent`` containing ``generators``.

    :param parent: Ambient group
    :param generators: Element indices, each < parent.order
    :return: Subgroup
    """
    return Subgroup(parent, generators=generators, budget=budget)


def whole(g: FiniteGroup) -> Subgroup:
    return Subgroup(g, elements=range(g.order), generators=g.generators)


def trivial_subgroup(g: FiniteGroup) -> Subgroup:
    return Subgroup(g, elements=[0], generators=[])


def direct_power(g: FiniteGroup,
                 k: int,
                 budget: int = DEFAULT_SIZE_BUDGET) -> DirectPower:
    """
    g^k with componentwise multiplication.

    :raises SizeBudgetExceeded: when |g|^k exceeds the budget.
    """
    if k < 1:
        raise PreconditionError("direct_power needs k >= 1")
    check_budget("direct power {}^{}".format(g.name or "G", k), g.order ** k, budget)
    return DirectPower(g, k)


def direct_product(*groups: FiniteGroup, name: str = None) -> DirectProduct:
    return DirectProduct(groups, name=name)


def cyclic_group(n: int, name: str = None) -> FiniteGroup:
    if n < 1:
        raise InvalidGroupError("Cyclic groups need a positive order")
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)],
                       inv_table=[(-a) % n for a in range(n)],
                       name=name or "C{}".format(n))


def _permutation_label(permutation: Permutation) -> str:
    cycles = permutation.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(point) for point in cycle) + ")" for cycle in cycles)


def from_permutations(generators: Sequence[Sequence[int]],
                      name: str = None,
                      budget: int = DEFAULT_SIZE_BUDGET) -> FiniteGroup:
    """
    Expands a permutation group, given by generators in array form, to a Cayley table.

    :param generators: Array forms, e.g. [[1, 0, 2], [1, 2, 0]].
    :param name: Display name.
    :return: FiniteGroup with the identity permutation at index 0 and cycle-notation labels.
    """
    degree = max([len(g) for g in generators] + [1])
    perms = [Permutation(list(g), size=degree) for g in generators] or [Permutation(list(range(degree)))]
    group = PermutationGroup(perms)
    check_budget("permutation group", int(group.order()), budget)

    elements = sorted(group.generate(), key=lambda p: (not p.is_Identity, p.array_form))
    position = {tuple(p.array_form): i for i, p in enumerate(elements)}
    table = [[position[tuple((a * b).array_form)] for b in elements] for a in elements]
    inverses = [position[tuple((~a).array_form)] for a in elements]
    LOGGER.debug("Expanded permutation group %s of order %s", name, len(elements))
    return FiniteGroup(table, inverses, [_permutation_label(p) for p in elements], name=name)


def symmetric_group(n: int) -> FiniteGroup:
    return from_permutations([g.array_form for g in SymmetricGroup(n).generators], name="S{}".format(n))


def alternating_group(n: int) -> FiniteGroup:
    return from_permutations([g.array_form for g in AlternatingGroup(n).generators], name="A{}".format(n))


def is_normal(n: Subgroup, in_: Subgroup) -> bool:
    """
    True iff ``in_`` conjugates ``n`` into itself. Checked on generators of both.

    :raises ContainmentError: n is not contained in in_.
    """
    if n.parent != in_.parent or not n.issubset(in_):
        raise ContainmentError("Normality needs n to be contained in the ambient subgroup")
    parent = n.parent
    for t in in_.generators:
        for h in n.generators:
            if parent.conjugate(t, h) not in n:
                return False
    return True


def quotient_group(g: FiniteGroup, n: Subgroup) -> Tuple[FiniteGroup, GroupHom]:
    """
    Coset group g/n; the representative of each coset is its smallest element index.

    :return: (quotient group, projection)
    """
    if n.parent != g:
        raise ContainmentError("Quotient needs a subgroup of the given group")
    if not is_normal(n, whole(g)):
        raise NotNormalError("Cannot form a quotient by a non-normal subgroup")

    coset_of = [-1] * g.order
    representatives = []  # type: List[int]
    for x in range(g.order):
        if coset_of[x] < 0:
            for h in n.elements:
                coset_of[g.mul(x, h)] = len(representatives)
            representatives.append(x)

    table = [[coset_of[g.mul(a, b)] for b in representatives] for a in representatives]
    inverses = [coset_of[g.inv(a)] for a in representatives]
    labels = [g.label(a) for a in representatives]
    name = "{}/{}".format(g.name, n.order) if g.name else None
    quotient = FiniteGroup(table, inverses, labels, name=name)
    return quotient, GroupHom(g, quotient, coset_of)


def conjugacy_classes(g: FiniteGroup) -> List[List[int]]:
    assigned = set()  # type: set
    classes = []
    for x in range(g.order):
        if x in assigned:
            continue
        orbit = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for t in g.generators:
                z = g.conjugate(t, y)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        assigned |= orbit
        classes.append(sorted(orbit))
    return classes


def normal_closure(g: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    gens = [x for x in set(elements) if x != 0]
    reached = _closure_set(g, gens)
    changed = True
    while changed:
        changed = False
        for h in list(gens):
            for t in g.generators:
                c = g.conjugate(t, h)
                if c not in reached:
                    gens.append(c)
                    reached = _closure_set(g, gens, seed=reached)
                    changed = True
    return Subgroup(g, elements=reached, generators=gens)


def _lex_key(subgroup: Subgroup) -> tuple:
    return (subgroup.order, subgroup.elements)


def normal_subgroups(g: FiniteGroup) -> List[Subgroup]:
    """
    All normal subgroups, sorted by order then element list.

    Normal closures of conjugacy class representatives, then joins until nothing new appears.
    """
    found = {}  # type: Dict[tuple, Subgroup]
    for cls in conjugacy_classes(g):
        sub = normal_closure(g, [cls[0]])
        found[sub.elements] = sub

    frontier = list(found.values())
    while frontier:
        fresh = []
        current = list(found.values())
        for a in frontier:
            for b in current:
                if a.issubset(b) or b.issubset(a):
                    continue
                joined = closure(g, a.generators + b.generators)
                if joined.elements not in found:
                    found[joined.elements] = joined
                    fresh.append(joined)
        frontier = fresh

    return sorted(found.values(), key=_lex_key)


def minimal_normal_subgroups(g: FiniteGroup) -> List[Subgroup]:
    nontrivial = [n for n in normal_subgroups(g) if n.order > 1]
    return [n for n in nontrivial if not any(m.order < n.order and m.issubset(n) for m in nontrivial)]


def is_simple(g: FiniteGroup) -> bool:
    if g.order < 2:
        raise PreconditionError("The trivial group is neither simple nor non-simple here")
    for cls in conjugacy_classes(g):
        if cls[0] != 0 and normal_closure(g, [cls[0]]).order != g.order:
            return False
    return True


def _pick(candidates: List[Subgroup], prefer_last: bool) -> Subgroup:
    smallest = min(c.order for c in candidates)
    tied = sorted((c for c in candidates if c.order == smallest), key=_lex_key)
    return tied[-1] if prefer_last else tied[0]


def composition_series(g: FiniteGroup, prefer_last: bool = False) -> List[Subgroup]:
    """
    G = G_1 > ... > G_n = 1, each step a maximal normal subgroup of the previous member.

    Among maximal normal subgroups the smallest is taken, ties broken by the sorted element list.
    """
    series = [whole(g)]
    while series[-1].order > 1:
        current = series[-1]
        group = current.as_group()
        proper = [n for n in normal_subgroups(group) if n.order < group.order]
        maximal = [n for n in proper if not any(n.order < m.order and n.issubset(m) for m in proper)]
        lifted = [Subgroup(g, elements=[group.lift(x) for x in n.elements]) for n in maximal]
        series.append(_pick(lifted, prefer_last))
    return series


def composition_factors(g: FiniteGroup, prefer_last: bool = False) -> List[FiniteGroup]:
    series = composition_series(g, prefer_last)
    factors = []
    for upper, lower in zip(series, series[1:]):
        group = upper.as_group()
        quotient, _ = quotient_group(group, Subgroup(group, elements=[group.local(x) for x in lower.elements]))
        factors.append(quotient)
    return factors


def element_order(g: FiniteGroup, x: int) -> int:
    order, y = 1, x
    while y != 0:
        y = g.mul(y, x)
        order += 1
    return order


def is_abelian(g: FiniteGroup) -> bool:
    gens = g.generators
    return all(g.mul(a, b) == g.mul(b, a) for a in gens for b in gens)


def abelian_invariants(g: FiniteGroup) -> List[int]:
    """
    Prime-power invariants of an abelian group, sorted ascending.
    """
    if not is_abelian(g):
        raise PreconditionError("Abelian invariants are only defined for abelian groups")
    orders = [element_order(g, x) for x in range(g.order)]
    invariants = []
    for prime, multiplicity in factorint(g.order).items():
        # ranks[j] = number of cyclic factors of order >= p^j
        counts = [sum(1 for o in orders if (prime ** j) % o == 0) for j in range(multiplicity + 2)]
        ranks = [0] + [_log(counts[j] // counts[j - 1], prime) for j in range(1, multiplicity + 2)]
        for j in range(1, multiplicity + 1):
            invariants.extend([prime ** j] * (ranks[j] - ranks[j + 1]))
    return sorted(invariants)


def _log(value: int, base: int) -> int:
    exponent = 0
    while value > 1:
        value //= base
        exponent += 1
    return exponent


def order_profile(g: FiniteGroup) -> List[Tuple[int, int]]:
    return sorted(Counter(element_order(g, x) for x in range(g.order)).items())


def are_isomorphic(a: FiniteGroup,
                   b: FiniteGroup,
                   budget: int = DEFAULT_SIZE_BUDGET) -> bool:
    """
    Desk-scale isomorphism test: order, abelian invariants or element-order profile, then a
    search over images of a's generators.
    """
    if a.order != b.order:
        return False
    if is_abelian(a) != is_abelian(b):
        return False
    if is_abelian(a):
        return abelian_invariants(a) == abelian_invariants(b)
    if order_profile(a) != order_profile(b):
        return False

    gens = a.generators
    candidates = [[y for y in range(b.order) if element_order(b, y) == element_order(a, g)] for g in gens]
    attempts = [0]

    def search(assigned: List[int]) -> bool:
        if len(assigned) == len(gens):
            attempts[0] += 1
            check_budget("isomorphism search", attempts[0], budget)
            return _extends_to_isomorphism(a, b, gens, assigned)
        return any(search(assigned + [y]) for y in candidates[len(assigned)])

    return search([])


def extend_homomorphism(a: FiniteGroup,
                        b: FiniteGroup,
                        gens: Sequence[int],
                        images: Sequence[int]) -> Optional[GroupHom]:
    """
    The homomorphism sending ``gens`` to ``images``, or None when that assignment does not extend.

    :param gens: Generators of a.
    :param images: Elements of b, one per generator.
    """
    image = {0: 0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y, z = a.mul(x, g), b.mul(image[x], h)
            if y in image:
                if image[y] != z:
                    return None
            else:
                image[y] = z
                queue.append(y)
    if len(image) != a.order:
        return None
    return GroupHom(a, b, [image[x] for x in range(a.order)])


def _extends_to_isomorphism(a: FiniteGroup,
                            b: FiniteGroup,
                            gens: List[int],
                            images: List[int]) -> bool:
    hom = extend_homomorphism(a, b, gens, images)
    return hom is not None and hom.is_bijective()


def isomorphic_actions(a: GroupHom,
                       b: GroupHom,
                       budget: int = DEFAULT_SIZE_BUDGET) -> bool:
    """
    Whether two endomorphisms are conjugate: some isomorphism theta of their groups has theta.a == b.theta.
    """
    source, target = a.source, b.source
    if source.order != target.order or order_profile(source) != order_profile(target):
        return False

    gens = source.generators
    candidates = [[y for y in range(target.order) if element_order(target, y) == element_order(source, g)]
                  for g in gens]
    attempts = [0]

    def intertwines(theta: Optional[GroupHom]) -> bool:
        if theta is None or not theta.is_bijective():
            return False
        return all(theta(a(x)) == b(theta(x)) for x in range(source.order))

    def search(assigned: List[int]) -> bool:
        if len(assigned) == len(gens):
            attempts[0] += 1
            check_budget("action conjugacy search", attempts[0], budget)
            return intertwines(extend_homomorphism(source, target, gens, assigned))
        return any(search(assigned + [y]) for y in candidates[len(assigned)])

    return search([])


def all_subgroups(g: FiniteGroup) -> List[Subgroup]:
    found = {}  # type: Dict[tuple, Subgroup]
    for x in range(g.order):
        sub = closure(g, [x])
        found.setdefault(sub.elements, sub)

    frontier = list(found.values())
    cyclic = list(found.values())
    while frontier:
        fresh = []
        for a in frontier:
            for b in cyclic:
                if b.issubset(a):
                    continue
                joined = closure(g, a.generators + b.generators)
                if joined.elements not in found:
                    found[joined.elements] = joined
                    fresh.append(joined)
        frontier = fresh

    return sorted(found.values(), key=_lex_key)


# Non-abelian simple groups determined by their order, in the range desk-scale runs reach
SIMPLE_GROUP_NAMES = {60: "A5", 168: "PSL(2,7)", 360: "A6", 504: "PSL(2,8)", 660: "PSL(2,11)"}


def simple_group_tag(g: FiniteGroup) -> str:
    """
    Display tag of a simple group: Cp for abelian ones, the standard name when its order pins it down.
    """
    if is_abelian(g):
        return "C{}".format(g.order)
    return SIMPLE_GROUP_NAMES.get(g.order, "simple({})".format(g.order))
