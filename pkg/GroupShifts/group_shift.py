import math
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Set, Tuple
import networkx as nx
import numpy as np
from GroupShifts.constants import DEFAULT_SIZE_BUDGET
from GroupShifts.exceptions import AlphabetMismatchError, ContainmentError, InvalidGroupError, PreconditionError
from GroupShifts.finite_group import DirectPower, FiniteGroup, InducedGroup, Subgroup, closure
from GroupShifts.utils import LOGGER, check_budget, fingerprint, sequence_fingerprint

Word = Tuple[int, ...]


class KernelChainReport(NamedTuple):
    sizes: List[int]
    limit_degree: int
    minimal_step: int
    entropy_log: float


class FinitePoint(NamedTuple):
    preperiod: Word
    period: Word


class BlockGroup():
    """
    The (i+1)-blocks G[i] of a shift, as a subgroup of alphabet^(i+1).
    """
    def __init__(self, shift: "GroupShift", length: int, words: Iterable[Word]) -> None:
        self.shift = shift
        self.length = length
        self.words = sorted(set(words))
        self.power = DirectPower(shift.alphabet, length)
        self.blocks = Subgroup(self.power, elements=[self.power.encode(w) for w in self.words])

    @property
    def order(self) -> int:
        return self.blocks.order

    def as_group(self) -> InducedGroup:
        return self.blocks.as_group()

    def local(self, word: Word) -> int:
        return self.blocks.local(self.power.encode(word))

    def word(self, local_index: int) -> Word:
        return self.power.decode(self.blocks.elements[local_index])


def forward_trim(words: Set[Word], width: int) -> Set[Word]:
    """
    Drops window words whose target state has no outgoing word, until nothing changes.
    """
    if width == 0:
        return set(words)
    live = set(words)
    while True:
        heads = {w[:-1] for w in live}
        kept = {w for w in live if w[1:] in heads}
        if len(kept) == len(live):
            return kept
        live = kept


class GroupShift():
    """
    A one-sided group shift presented by a window subgroup of alphabet^(width+1).

    The stored presentation is canonical: trimmed, with width equal to the minimal step.
    """
    def __init__(self,
                 alphabet: FiniteGroup,
                 width: int,
                 words: Iterable[Word],
                 budget: int = DEFAULT_SIZE_BUDGET) -> None:
        """
        :param alphabet: The alphabet group.
        :param width: Window width w, words have length w+1.
        :param words: Window words as tuples of alphabet indices; they must form a subgroup.
        :param budget: Size budget for enumerations on this shift and shifts derived from it.
        """
        if width < 0:
            raise PreconditionError("Window width must be non-negative")
        self.alphabet = alphabet
        self.budget = budget

        raw = {tuple(w) for w in words}
        raw.add((0,) * (width + 1))
        for w in raw:
            if len(w) != width + 1 or any(not 0 <= x < alphabet.order for x in w):
                raise InvalidGroupError("Window word {} does not fit width {}".format(w, width))

        live = self._trim(raw, width)
        projections = [{w[:i + 1] for w in live} for i in range(width + 1)]
        sizes = [len(projections[0])] + [len(projections[i]) // len(projections[i - 1]) for i in range(1, width + 1)]
        self.limit_degree = sizes[width]
        self.width = next(i for i, size in enumerate(sizes) if size == self.limit_degree)
        self.sizes = sizes[:self.width + 1] + [self.limit_degree]
        self.edges = sorted(projections[self.width])
        LOGGER.debug("Canonical shift on %s: width %s -> %s, ld %s", alphabet.name, width, self.width,
                     self.limit_degree)

        self.power = DirectPower(alphabet, self.width + 1)
        self.window = Subgroup(self.power, elements=[self.power.encode(w) for w in self.edges])
        self._fingerprint = None  # type: Optional[int]

        # Follower tables for block enumeration
        self._prefix_followers = {}  # type: Dict[Word, List[int]]
        for w in self.edges:
            for i in range(self.width):
                self._prefix_followers.setdefault(w[:i], []).append(w[i])
        self._successors = {}  # type: Dict[Word, List[int]]
        for w in self.edges:
            self._successors.setdefault(w[:-1], []).append(w[-1])
        for table in (self._prefix_followers, self._successors):
            for key in table:
                table[key] = sorted(set(table[key]))

        self.states = sorted(self._successors)
        self.state_graph = nx.MultiDiGraph()
        self.state_graph.add_nodes_from(self.states)
        for w in self.edges:
            self.state_graph.add_edge(w[:-1], w[1:], key=w[-1])

    @staticmethod
    def _trim(words: Set[Word], width: int) -> Set[Word]:
        return forward_trim(words, width)

    @property
    def identity_state(self) -> Word:
        return (0,) * self.width

    @property
    def entropy(self) -> float:
        return math.log(self.limit_degree)

    @property
    def minimal_step(self) -> int:
        return self.width

    @property
    def is_finite(self) -> bool:
        return self.limit_degree == 1

    @property
    def fingerprint(self) -> int:
        """
        Cache identity: window, width, the alphabet's structure and its element names.
        """
        if self._fingerprint is None:
            alphabet = self.alphabet
            self._fingerprint = fingerprint(self.width, alphabet.structure_key(), fingerprint(*alphabet.labels),
                                            sequence_fingerprint(self.window.elements))
        return self._fingerprint

    def derive(self, alphabet: FiniteGroup, width: int, words: Iterable[Word]) -> "GroupShift":
        """
        Builds another shift of the same kind and budget.
        """
        return type(self)(alphabet, width, words, budget=self.budget)

    def followers(self, word: Word) -> List[int]:
        if len(word) < self.width:
            return self._prefix_followers.get(word, [])
        return self._successors.get(word[len(word) - self.width:], [])

    def successor_states(self, state: Word) -> List[Word]:
        return [state[1:] + (x,) for x in self._successors.get(state, [])]

    def walk(self,
             length: int,
             accept: Callable[[Word], bool] = None) -> List[Word]:
        """
        Depth-first enumeration of forward-extendable words of the given length.

        :param length: Word length (i+1 for the block group G[i]).
        :param accept: Predicate on each extended prefix; must only inspect the last letters.
        :return: Sorted words.
        """
        found = []  # type: List[Word]
        stack = [()]  # type: List[Word]
        while stack:
            word = stack.pop()
            if len(word) == length:
                found.append(word)
                if len(found) > self.budget:
                    check_budget("block enumeration of length {}".format(length), len(found), self.budget)
                continue
            for letter in self.followers(word):
                extended = word + (letter,)
                if accept is None or accept(extended):
                    stack.append(extended)
        return sorted(found)

    def block_words(self, i: int) -> List[Word]:
        if i < 0:
            raise PreconditionError("Block index must be non-negative")
        if i <= self.width:
            return sorted({w[:i + 1] for w in self.edges})
        return self.walk(i + 1)

    def reachable_states(self, steps: int) -> Set[Word]:
        current = set(self.states)
        for _ in range(steps):
            following = {t for s in current for t in self.successor_states(s)}
            if following == current:
                break
            current = following
        return current

    def adjacency_matrix(self) -> np.ndarray:
        position = {s: i for i, s in enumerate(self.states)}
        matrix = np.zeros((len(self.states), len(self.states)), dtype=object)
        for w in self.edges:
            matrix[position[w[:-1]], position[w[1:]]] += 1
        return matrix

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupShift) and self.alphabet == other.alphabet and equals(self, other)

    def __hash__(self) -> int:
        return self.fingerprint

    def __repr__(self) -> str:
        return "<{} on {} width {} ld {}>".format(type(self).__name__, self.alphabet.name, self.width,
                                                  self.limit_degree)


def from_window(alphabet: FiniteGroup,
                w: int,
                window: Subgroup,
                budget: int = DEFAULT_SIZE_BUDGET) -> GroupShift:
    """
    Canonical shift whose admissible (w+1)-blocks are ``window``.

    :param window: Subgroup of alphabet^(w+1) (or of the alphabet itself when w = 0).
    """
    parent = window.parent
    if isinstance(parent, DirectPower) and parent.base == alphabet and parent.exponent == w + 1:
        words = [parent.decode(e) for e in window.elements]
    elif w == 0 and parent == alphabet:
        words = [(e,) for e in window.elements]
    else:
        raise AlphabetMismatchError("Window is not a subgroup of the alphabet power of width {}".format(w))
    return GroupShift(alphabet, w, words, budget=budget)


def from_generators(alphabet: FiniteGroup,
                    w: int,
                    generators: Iterable[Word],
                    budget: int = DEFAULT_SIZE_BUDGET) -> GroupShift:
    power = DirectPower(alphabet, w + 1)
    check_budget("window power", power.order, budget)
    window = closure(power, [power.encode(g) for g in generators], budget=budget)
    return from_window(alphabet, w, window, budget=budget)


def full_shift(g: FiniteGroup, budget: int = DEFAULT_SIZE_BUDGET) -> GroupShift:
    return GroupShift(g, 0, [(x,) for x in range(g.order)], budget=budget)


def trivial_shift(g: FiniteGroup, budget: int = DEFAULT_SIZE_BUDGET) -> GroupShift:
    return GroupShift(g, 0, [(0,)], budget=budget)


def subgroup_shift(g: FiniteGroup, sub: Subgroup, budget: int = DEFAULT_SIZE_BUDGET) -> GroupShift:
    """
    Full shift on a subgroup, inside the alphabet g.
    """
    return GroupShift(g, 0, [(x,) for x in sub.elements], budget=budget)


def trim(shift: GroupShift) -> GroupShift:
    return shift.derive(shift.alphabet, shift.width, forward_trim(set(shift.edges), shift.width))


def blocks(shift: GroupShift, i: int) -> BlockGroup:
    return BlockGroup(shift, i + 1, shift.block_words(i))


def kernel_chain(shift: GroupShift, bound: int = None) -> KernelChainReport:
    """
    |ker(G[i] -> G[i-1])| for i = 0..bound (index 0 holds |G[0]|); constant from the minimal step on.
    """
    bound = max(bound or 0, shift.width + 1)
    sizes = shift.sizes[:shift.width + 1] + [shift.limit_degree] * (bound - shift.width)
    return KernelChainReport(sizes, shift.limit_degree, shift.width, shift.entropy)


def entropy(shift: GroupShift) -> float:
    return shift.entropy


def limit_degree(shift: GroupShift) -> int:
    return shift.limit_degree


def minimal_step(shift: GroupShift) -> int:
    return shift.width


def recode_1step(shift: GroupShift):
    """
    Higher block presentation on the alphabet G[n], n the minimal step.

    :return: (width-1 shift, isomorphism code from ``shift`` onto it)
    """
    from GroupShifts.morphisms import SlidingBlockCode  # pylint: disable=import-outside-toplevel

    n = shift.width
    letters = blocks(shift, n)
    alphabet = letters.as_group()
    pairs = {(letters.local(w[:-1]), letters.local(w[1:])) for w in shift.block_words(n + 1)}
    recoded = shift.derive(alphabet, 1, pairs)
    code = SlidingBlockCode(shift, recoded, n, {w: letters.local(w) for w in letters.words})
    return recoded, code


def decode_1step(shift: GroupShift, recoded: GroupShift):
    """
    Inverse of the recode_1step code: every recoded letter is a block and decodes to its first letter.
    """
    from GroupShifts.morphisms import SlidingBlockCode  # pylint: disable=import-outside-toplevel

    letters = blocks(shift, shift.width)
    return SlidingBlockCode(recoded, shift, 0, {(x,): letters.word(x)[0] for (x,) in recoded.block_words(0)})


def is_finite(shift: GroupShift) -> bool:
    return shift.is_finite


def _normalize_point(preperiod: Word, period: Word) -> FinitePoint:
    length = len(period)
    smallest = next(d for d in range(1, length + 1)
                    if length % d == 0 and all(period[i] == period[i % d] for i in range(length)))
    period = period[:smallest]
    while preperiod and preperiod[-1] == period[-1]:
        preperiod = preperiod[:-1]
        period = period[-1:] + period[:-1]
    return FinitePoint(preperiod, period)


def enumerate_finite(shift: GroupShift) -> List[FinitePoint]:
    """
    Every point of a finite shift as (preperiod word, period word), both minimal.
    """
    if not shift.is_finite:
        raise PreconditionError("enumerate_finite needs a finite shift (limit degree 1)")
    if shift.width == 0:
        return [FinitePoint((), (0,))]

    points = []
    for start in shift.states:
        seen = {}  # type: Dict[Word, int]
        path = []
        state = start
        while state not in seen:
            seen[state] = len(path)
            path.append(state)
            state = shift.successor_states(state)[0]
        entry = seen[state]
        letters = tuple(s[0] for s in path)
        points.append(_normalize_point(letters[:entry], letters[entry:]))
    return sorted(points)


def sigma_image(shift: GroupShift, i: int) -> GroupShift:
    """
    sigma^i(G): the edges leaving states reachable in i steps.
    """
    if i < 0:
        raise PreconditionError("sigma_image needs i >= 0")
    if shift.width == 0 or i == 0:
        return shift
    reachable = shift.reachable_states(i)
    return shift.derive(shift.alphabet, shift.width, [w for w in shift.edges if w[:-1] in reachable])


def ker_sigma_power(shift: GroupShift, ell: int) -> GroupShift:
    """
    Points whose letters from position ell onwards are all the identity.
    """
    if ell < 0:
        raise PreconditionError("ker_sigma_power needs ell >= 0")
    if ell == 0:
        return trivial_shift(shift.alphabet, budget=shift.budget)
    width = max(shift.width, ell)

    def accept(word: Word) -> bool:
        return len(word) <= ell or word[-1] == 0

    return shift.derive(shift.alphabet, width, shift.walk(width + 1, accept))


def sigma_preimage(sub: GroupShift, ambient: GroupShift, r: int) -> GroupShift:
    """
    {x in ambient : sigma^r(x) in sub}.
    """
    if not contains(ambient, sub):
        raise ContainmentError("sigma_preimage needs sub inside ambient")
    if r == 0:
        return sub
    span = sub.width + 1
    allowed = set(sub.edges)
    width = max(ambient.width, r + sub.width)

    def accept(word: Word) -> bool:
        return len(word) < r + span or word[-span:] in allowed

    return ambient.derive(ambient.alphabet, width, ambient.walk(width + 1, accept))


def _check_alphabets(a: GroupShift, b: GroupShift) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError("Shifts over different alphabets cannot be compared")


def equals(a: GroupShift, b: GroupShift) -> bool:
    if not isinstance(b, GroupShift):
        return False
    _check_alphabets(a, b)
    if a.width != b.width:
        return False
    return a.edges == b.edges


def contains(big: GroupShift, small: GroupShift) -> bool:
    _check_alphabets(big, small)
    allowed = set(big.edges)
    return all(w in allowed for w in small.block_words(big.width))


def intersection(h: GroupShift, n: GroupShift) -> GroupShift:
    _check_alphabets(h, n)
    width = max(h.width, n.width)
    common = set(h.block_words(width)) & set(n.block_words(width))
    return h.derive(h.alphabet, width, common)


def periodic_count(shift: GroupShift, p: int) -> int:
    """
    Number of points with sigma^p(x) = x: trace of A^p in exact integers.
    """
    if p < 1:
        raise PreconditionError("periodic_count needs p >= 1")
    return int(np.trace(np.linalg.matrix_power(shift.adjacency_matrix(), p)))


def group_graph(shift: GroupShift) -> nx.MultiDiGraph:
    """
    Directed group graph: letters as vertices for width 0 and 1, w-blocks as vertices otherwise.
    """
    if shift.width > 0:
        return shift.state_graph
    graph = nx.MultiDiGraph()
    letters = [w[0] for w in shift.edges]
    graph.add_nodes_from((x,) for x in letters)
    for a in letters:
        for b in letters:
            graph.add_edge((a,), (b,), key=b)
    return graph


def brute_force_blocks(shift: GroupShift, i: int) -> Set[Word]:
    """
    Reference enumeration: words of length i+1 whose every window-length sub-word is admissible
    and that extend forward by |states| further letters (enough to close a cycle).
    """
    allowed = set(shift.edges)
    span = shift.width + 1
    letters = range(shift.alphabet.order)
    memo = {}  # type: Dict[Tuple[Word, int], bool]

    def admissible(word: Word) -> bool:
        return all(word[j:j + span] in allowed for j in range(len(word) - span + 1))

    def extends(tail: Word, remaining: int) -> bool:
        if remaining == 0:
            return True
        key = (tail, remaining)
        if key not in memo:
            memo[key] = any(extends((tail + (x,))[-span:], remaining - 1)
                            for x in letters if len(tail) + 1 < span or (tail + (x,))[-span:] in allowed)
        return memo[key]

    check_budget("brute force block oracle", shift.alphabet.order ** (i + 1), shift.budget)
    words = [()]  # type: List[Word]
    for _ in range(i + 1):
        words = [w + (x,) for w in words for x in letters]
    return {w for w in words if admissible(w) and extends(w[-span:], max(len(shift.states), 1))}


def point_count(shift: GroupShift) -> int:
    """
    Number of points of a finite shift; each state of a limit degree one shift has exactly one successor.
    """
    if not shift.is_finite:
        raise PreconditionError("point_count needs a finite shift (limit degree 1)")
    return len(shift.edges)
