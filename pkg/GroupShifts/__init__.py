from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List
from fcache.cache import FileCache
from GroupShifts.constants import DEFAULT_INSTANCE_ID, DEFAULT_PERIOD_BOUND, DEFAULT_SIZE_BUDGET, REPORT_PREFIX
from GroupShifts.exceptions import GroupShiftError, ManifestResolveError
from GroupShifts.group_shift import GroupShift
from GroupShifts.loader import Manifest, TaskSpec, load_manifest
from GroupShifts.tasks import Analyze, Decompose, Dot, Invariants, Star, Task
from .utils import LOGGER, fingerprint


# pylint: disable=dangerous-default-value
class GroupShiftAnalyzer():
    """
    Runs manifest tasks against group shifts and caches their reports.
    """
    def __init__(self,
                 manifest: str = None,
                 instance_id: str = DEFAULT_INSTANCE_ID,
                 size_budget: int = DEFAULT_SIZE_BUDGET,
                 period_bound: int = DEFAULT_PERIOD_BOUND,
                 ell_bound: int = None,
                 disable_cache: bool = False,
                 cache_directory: str = None,
                 custom_tasks: dict = {}) -> None:
        """
        An analyzer for one manifest of group and shift definitions.

        :param manifest: Manifest JSON text, optional; shifts can also be registered directly.
        :param instance_id: Unique identifier for the analyzer, names the on-disk cache.
        :param size_budget: Largest group or block enumeration any task may build, defaults to 10^6.
        :param period_bound: Largest period for periodic point counts, defaults to 8.
        :param ell_bound: Search bound for the image stabilization index; defaults to twice the number of states.
        :param disable_cache: Keep reports in memory only.
        :param cache_directory: Location of the cache directory. When unset, FCache will determine the location
        :param custom_tasks: Dictionary of custom operation names : custom Task classes
        """
        # Configuration
        self.instance_id = instance_id
        self.size_budget = size_budget
        self.period_bound = period_bound
        self.ell_bound = ell_bound
        self.disable_cache = disable_cache
        self.context = {
            "period_bound": self.period_bound,
            "ell_bound": self.ell_bound
        }

        # Class objects
        if disable_cache:
            self.cache = {}  # type: dict
        else:
            self.cache = FileCache(self.instance_id, app_cache_dir=cache_directory)
        self.manifest = Manifest({}, {}, [])
        if manifest is not None:
            self.manifest = load_manifest(manifest, budget=self.size_budget)

        # Mappings
        default_task_mapping = {
            "analyze": Analyze,
            "decompose": Decompose,
            "invariants": Invariants,
            "star": Star,
            "dot": Dot
        }

        valid_tasks = {}
        for name, task in custom_tasks.items():
            if isinstance(task, type) and issubclass(task, Task):
                valid_tasks[name] = task
            else:
                LOGGER.warning("Custom task %s is not a Task subclass, ignoring it.", name)

        self.task_mapping = {**valid_tasks, **default_task_mapping}

    @property
    def shifts(self) -> Dict[str, GroupShift]:
        return self.manifest.shifts

    def register_shift(self, name: str, shift: GroupShift) -> None:
        self.manifest.shifts[name] = shift

    def _cache_key(self, operation: str, shift: GroupShift, parameters: dict, context: dict) -> str:
        settings = sorted({**parameters, **context}.items())
        return "{}_{}".format(REPORT_PREFIX, fingerprint(operation, shift.fingerprint, settings))

    def run_task(self,
                 operation: str,
                 shift_name: str,
                 parameters: dict = {},
                 context: dict = {}) -> dict:
        """
        Runs one operation on a named shift.

        :param operation: Key of the task mapping.
        :param shift_name: Shift defined in the manifest or registered.
        :param parameters: Task parameters.
        :param context: Extra run settings merged over the analyzer's (certificates, output).
        :return: Report with 'operation' and 'shift' keys added.
        """
        if shift_name not in self.shifts:
            raise ManifestResolveError("Unknown shift '{}'".format(shift_name))
        if operation not in self.task_mapping:
            raise ManifestResolveError("Unknown operation '{}'".format(operation))

        shift = self.shifts[shift_name]
        task = self.task_mapping[operation](parameters)
        run_context = {**self.context, **context}
        key = self._cache_key(operation, shift, parameters, run_context)

        if task.cacheable and key in self.cache:
            LOGGER.info("Report for %s on %s served from cache", operation, shift_name)
            report = self.cache[key]
        else:
            report = task(shift, run_context)
            if task.cacheable:
                self.cache[key] = report
                if not self.disable_cache:
                    self.cache.sync()

        return {"operation": operation, "shift": shift_name, **report}

    # pylint: disable=broad-except
    def _run_entry(self, entry: TaskSpec, context: dict) -> dict:
        try:
            return self.run_task(entry.operation, entry.shift, entry.parameters, context)
        except GroupShiftError as excep:
            LOGGER.warning("Task %s on %s failed: %s", entry.operation, entry.shift, excep)
            return {"operation": entry.operation, "shift": entry.shift, "error": str(excep),
                    "exit_code": excep.exit_code}
        except Exception as excep:
            LOGGER.warning("Task %s on %s raised unexpectedly: %s", entry.operation, entry.shift, excep)
            return {"operation": entry.operation, "shift": entry.shift, "error": str(excep), "exit_code": 1}

    def run_all(self, jobs: int = 1, context: dict = {}) -> List[dict]:
        """
        Runs the manifest's task list; a failing task is reported in place instead of stopping the batch.

        :param jobs: Worker threads.
        :return: Reports in manifest order.
        """
        entries = self.manifest.tasks
        if jobs <= 1:
            return [self._run_entry(entry, context) for entry in entries]
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(lambda entry: self._run_entry(entry, context), entries))

    def destroy(self) -> None:
        """
        Deletes the on-disk report cache.

        :return:
        """
        if not self.disable_cache:
            self.cache.delete()
        else:
            self.cache.clear()
