import json
from typing import Dict, List, NamedTuple, Optional, Sequence
from GroupShifts.constants import DEFAULT_SIZE_BUDGET, GROUPS_KEY, SHIFTS_KEY, TASKS_KEY
from GroupShifts.exceptions import ManifestParseError, ManifestResolveError
from GroupShifts.finite_group import FiniteGroup, alternating_group, cyclic_group, direct_product, \
    from_permutations, symmetric_group
from GroupShifts.group_shift import GroupShift, from_generators, full_shift
from GroupShifts.utils import LOGGER


class TaskSpec(NamedTuple):
    operation: str
    shift: str
    parameters: dict


class Manifest(NamedTuple):
    groups: Dict[str, FiniteGroup]
    shifts: Dict[str, GroupShift]
    tasks: List[TaskSpec]


def _line_of(text: str, name: str) -> Optional[int]:
    needle = '"{}"'.format(name)
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


def parse_manifest(text: str) -> dict:
    """
    Parses manifest JSON and checks the top-level layout.

    :raises ManifestParseError: with the offending line.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as excep:
        raise ManifestParseError(excep.msg, line=excep.lineno) from excep

    if not isinstance(raw, dict):
        raise ManifestParseError("Manifest must be a JSON object", line=1)
    for key, kind in ((GROUPS_KEY, dict), (SHIFTS_KEY, dict), (TASKS_KEY, list)):
        if key in raw and not isinstance(raw[key], kind):
            raise ManifestParseError("'{}' must be a {}".format(key, kind.__name__), line=_line_of(text, key))
    return raw


def _element_index(group: FiniteGroup, name) -> int:
    labels = group.labels
    if str(name) in labels:
        return labels.index(str(name))
    raise KeyError(name)


def _create_table_group(name: str, definition: dict) -> FiniteGroup:
    labels = definition.get("labels")
    rows = definition["table"]
    if labels is not None:
        position = {str(label): i for i, label in enumerate(labels)}
        rows = [[position[str(x)] for x in row] for row in rows]
    group = FiniteGroup(rows, labels=labels, name=name)
    group.verify()
    return group


def _create_group(name: str,
                  definitions: dict,
                  groups: Dict[str, FiniteGroup],
                  text: str,
                  budget: int,
                  pending: Sequence[str] = ()) -> FiniteGroup:
    if name in groups:
        return groups[name]
    if name not in definitions:
        raise ManifestResolveError("Unknown group '{}'".format(name), line=_line_of(text, name))
    if name in pending:
        raise ManifestResolveError("Group '{}' is defined through itself".format(name), line=_line_of(text, name))

    definition = definitions[name]
    try:
        if "cyclic" in definition:
            group = cyclic_group(int(definition["cyclic"]), name=name)
        elif "symmetric" in definition:
            group = symmetric_group(int(definition["symmetric"]))
        elif "alternating" in definition:
            group = alternating_group(int(definition["alternating"]))
        elif "permutations" in definition:
            group = from_permutations(definition["permutations"], name=name, budget=budget)
        elif "product" in definition:
            factors = [_create_group(factor, definitions, groups, text, budget, tuple(pending) + (name,))
                       for factor in definition["product"]]
            group = direct_product(*factors, name=name)
        elif "table" in definition:
            group = _create_table_group(name, definition)
        else:
            raise ManifestResolveError("Group '{}' has no table, permutations, cyclic or product".format(name),
                                       line=_line_of(text, name))
    except (KeyError, TypeError, ValueError) as excep:
        raise ManifestResolveError("Group '{}' is malformed: {}".format(name, excep),
                                   line=_line_of(text, name)) from excep

    groups[name] = group
    return group


def _create_shift(name: str,
                  definition: dict,
                  groups: Dict[str, FiniteGroup],
                  text: str,
                  budget: int) -> GroupShift:
    line = _line_of(text, name)
    alphabet_name = definition.get("alphabet")
    if alphabet_name not in groups:
        raise ManifestResolveError("Shift '{}' uses unknown alphabet '{}'".format(name, alphabet_name), line=line)
    alphabet = groups[alphabet_name]

    if definition.get("full"):
        return full_shift(alphabet, budget=budget)

    width = int(definition.get("width", 0))
    generators = []
    for generator in definition.get("window", []):
        if len(generator) != width + 1:
            raise ManifestResolveError("Shift '{}': generator {} does not have {} letters".format(
                name, generator, width + 1), line=line)
        try:
            generators.append(tuple(_element_index(alphabet, letter) for letter in generator))
        except KeyError as excep:
            raise ManifestResolveError("Shift '{}': unknown element {} of '{}'".format(
                name, excep, alphabet_name), line=line) from excep
    return from_generators(alphabet, width, generators, budget=budget)


def _create_tasks(raw: list, shifts: Dict[str, GroupShift], text: str) -> List[TaskSpec]:
    tasks = []
    for entry in raw:
        if not isinstance(entry, dict) or "operation" not in entry or "shift" not in entry:
            raise ManifestParseError("Tasks need an 'operation' and a 'shift'", line=_line_of(text, TASKS_KEY))
        if entry["shift"] not in shifts:
            raise ManifestResolveError("Task refers to unknown shift '{}'".format(entry["shift"]),
                                       line=_line_of(text, entry["shift"]))
        parameters = {k: v for k, v in entry.items() if k not in ("operation", "shift")}
        tasks.append(TaskSpec(entry["operation"], entry["shift"], parameters))
    return tasks


def load_manifest(text: str, budget: int = DEFAULT_SIZE_BUDGET) -> Manifest:
    """
    Parses and resolves a manifest.

    :param text: Manifest JSON.
    :param budget: Size budget handed to every group and shift.
    :return: Manifest with groups and shifts by name and the task list in file order.
    """
    raw = parse_manifest(text)
    group_definitions = raw.get(GROUPS_KEY, {})
    groups = {}  # type: Dict[str, FiniteGroup]
    for name in group_definitions:
        _create_group(name, group_definitions, groups, text, budget)

    shifts = {}
    for name, definition in raw.get(SHIFTS_KEY, {}).items():
        shifts[name] = _create_shift(name, definition, groups, text, budget)

    tasks = _create_tasks(raw.get(TASKS_KEY, []), shifts, text)
    LOGGER.info("Loaded %s groups, %s shifts and %s tasks", len(groups), len(shifts), len(tasks))
    return Manifest(groups, shifts, tasks)


def dump_group(group: FiniteGroup) -> dict:
    labels = group.labels
    return {"table": [[labels[x] for x in row] for row in group.cayley_table()], "labels": labels}


def dump_shift(shift: GroupShift, alphabet_name: str) -> dict:
    """
    Manifest form of a shift: the window given by its generators.
    """
    words = [shift.power.decode(e) for e in shift.window.generators]
    return {
        "alphabet": alphabet_name,
        "width": shift.width,
        "window": [[shift.alphabet.label(x) for x in word] for word in words]
    }


def dump_manifest(shifts: Dict[str, GroupShift]) -> str:
    """
    Serializes shifts with their alphabets; each alphabet is written once as a Cayley table.
    """
    groups = {}  # type: Dict[str, dict]
    dumped = {}
    for name, shift in sorted(shifts.items()):
        alphabet_name = shift.alphabet.name or "{}_alphabet".format(name)
        groups.setdefault(alphabet_name, dump_group(shift.alphabet))
        dumped[name] = dump_shift(shift, alphabet_name)
    return json.dumps({GROUPS_KEY: groups, SHIFTS_KEY: dumped, TASKS_KEY: []}, indent=2)
