from GroupShifts.group_shift import GroupShift


# pylint: disable=dangerous-default-value
class Task():
    """
    In general, default & custom tasks should only need to override:
    * __call__() - Runs the task on one shift and returns its report.
    * load_provisioning - Parses task parameters
    """
    cacheable = True

    def __init__(self,
                 parameters: dict = {}) -> None:
        """
        A generic task object.

        :param parameters: Task entry of the manifest without its 'operation' and 'shift' keys.
        """
        self.parameters = parameters

        self.parsed_provisioning = self.load_provisioning()

    # pylint: disable=no-self-use
    def load_provisioning(self) -> dict:
        """
        Method to load data on object initialization, if desired.

        This should parse the raw values in self.parameters into format Python can comprehend.
        """
        return {}

    def __eq__(self, other):
        return self.parameters == other.parameters

    def __call__(self, shift: GroupShift, context: dict = None) -> dict:
        """
        Task implementation goes here.

        :param shift: Resolved shift from the manifest.
        :param context: Run-wide settings (period_bound, ell_bound, certificates, output).
        :return: Report
        """
        return {}
