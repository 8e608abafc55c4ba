import networkx as nx
from networkx.drawing.nx_pydot import to_pydot
from GroupShifts.group_shift import GroupShift, group_graph
from GroupShifts.tasks import Task
from GroupShifts.utils import LOGGER


def annotated_graph(shift: GroupShift) -> nx.MultiDiGraph:
    """
    State graph with element-name labels; the identity state is filled.
    """
    source = group_graph(shift)
    names = {state: "s{}".format(i) for i, state in enumerate(sorted(source.nodes))}
    identity = (0,) * max(shift.width, 1)

    graph = nx.MultiDiGraph()
    for state, name in names.items():
        label = " ".join(shift.alphabet.label(x) for x in state)
        if state == identity:
            graph.add_node(name, label=label, style="filled", fillcolor="lightgrey")
        else:
            graph.add_node(name, label=label)
    for u, v, letter in source.edges(keys=True):
        graph.add_edge(names[u], names[v], key=letter, label=shift.alphabet.label(letter))
    return graph


class Dot(Task):
    cacheable = False

    def __call__(self, shift: GroupShift, context: dict = None) -> dict:
        """
        Renders the state graph as DOT; writes it when an output path is configured.

        :return:
        """
        output = (context or {}).get("output") or self.parameters.get("output")
        graph = annotated_graph(shift)
        text = to_pydot(graph).to_string()

        if output:
            with open(output, "w") as dot_file:
                dot_file.write(text)
            LOGGER.info("Wrote state graph to %s", output)

        return {
            "states": graph.number_of_nodes(),
            "edges": graph.number_of_edges(),
            "output": output,
            "dot": text
        }
