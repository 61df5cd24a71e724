"""Command implementations for each module, and the command registry."""
import logging
from typing import Any, Dict, List

import networkx as nx

from cayley_tw import (
    TdReport,
    TreeDecomposition,
    cayley_ball,
    clique_tree,
    format_graph,
    format_td,
    graph_to_dot,
    interior,
    muller_schupp_td,
    normalize_td,
    td_to_dot,
    treewidth_exact,
    validate_td,
)
from cuts import (
    CutsPipeline,
    corners,
    cut_from_side,
    cut_to_dot,
    enumerate_kcuts,
    is_nested,
    optimal_cuts,
    path_family,
    structure_tree_to_dot,
)
from errors import AxiomViolation, InputError, UsageError
from fixtures import comb_windows
from formal_lang import (
    cfg_to_pda,
    format_automaton,
    format_grammar,
    format_pda,
    hotz_presentation,
    nfa_to_dfa,
    pda_to_cfg,
    reduce_grammar,
)
from graph_of_groups import bst_ball, free_subgroup_data
from models import RunConfig
from pregroups import format_pregroup, pregroup_from_gog, universal_wp
from rewrite import FuelExhausted, check_local_confluence, format_word, normalize, parse_word
from .base import CommandBase, CommandOutput
from .inputs import (
    is_graph_ref,
    load_automaton,
    load_gog,
    load_grammar,
    load_graph,
    load_host,
    load_oracle,
    load_pda,
    load_pregroup,
    load_system,
    load_td,
)

logger = logging.getLogger(__name__)

PREGROUP_OK = "pregroup: OK (P1–P4)"


def _verdict(value: bool) -> str:
    return "true" if value else "false"


def _graph_data(graph: nx.Graph) -> Dict[str, Any]:
    return {
        "vertices": graph.number_of_nodes(),
        "edges": graph.number_of_edges(),
        "adjacency": {str(v): sorted(str(w) for w in graph.neighbors(v)) for v in sorted(graph.nodes, key=str)},
    }


def _cut_data(cut) -> Dict[str, Any]:
    return {
        "weight": cut.weight,
        "boundary": sorted(f"{u}-{v}" for u, v in cut.boundary),
        "side": sorted(str(v) for v in cut.side),
        "infinite": [cut.infinite, cut.other_infinite],
    }


# ==================== rewrite ====================

class RewriteNormalizeCommand(CommandBase):
    """Normal form of a word under a semi-Thue system."""
    arguments = ("system", "word")

    @property
    def name(self) -> str:
        return "rewrite normalize"

    @property
    def description(self) -> str:
        return "Rewrite a word to an irreducible word (leftmost strategy, fuel-bounded)"

    def _run(self, config: RunConfig) -> CommandOutput:
        system = load_system(config.inputs[0])
        result = normalize(system, parse_word(config.inputs[1]), config.fuel)
        if isinstance(result, FuelExhausted):
            text = f"FuelExhausted after {result.steps} steps at {format_word(result.word)}"
            return CommandOutput(text, {"normal_form": None, "fuel_exhausted": True,
                                        "steps": result.steps, "reached": list(result.word)})
        return CommandOutput(format_word(result), {"normal_form": list(result), "fuel_exhausted": False})


class RewriteConfluenceCommand(CommandBase):
    """Local confluence by critical pairs."""
    arguments = ("system",)

    @property
    def name(self) -> str:
        return "rewrite confluence"

    @property
    def description(self) -> str:
        return "Check local confluence of a semi-Thue system on all critical pairs"

    def _run(self, config: RunConfig) -> CommandOutput:
        verdict = check_local_confluence(load_system(config.inputs[0]), config.fuel)
        data = {"status": verdict.status.value, "pairs_checked": verdict.pairs_checked}
        if verdict.peak is not None:
            data.update(peak=list(verdict.peak), left=list(verdict.left), right=list(verdict.right))
        return CommandOutput(f"{verdict.describe()} ({verdict.pairs_checked} critical pairs)", data)


# ==================== lang ====================

class NfaToDfaCommand(CommandBase):
    arguments = ("automaton",)

    @property
    def name(self) -> str:
        return "lang nfa2dfa"

    @property
    def description(self) -> str:
        return "Subset construction, reachable subsets only"

    def _run(self, config: RunConfig) -> CommandOutput:
        dfa = nfa_to_dfa(load_automaton(config.inputs[0]))
        text = format_automaton(dfa)
        return CommandOutput(text.rstrip("\n"), {"states": len(dfa.states), "automaton": text})


class CfgToPdaCommand(CommandBase):
    arguments = ("grammar",)

    @property
    def name(self) -> str:
        return "lang cfg2pda"

    @property
    def description(self) -> str:
        return "Two-state push-down automaton of a context-free grammar"

    def _run(self, config: RunConfig) -> CommandOutput:
        pda = cfg_to_pda(load_grammar(config.inputs[0]))
        text = format_pda(pda)
        return CommandOutput(text.rstrip("\n"), {"transitions": len(pda.transitions), "pda": text})


class PdaToCfgCommand(CommandBase):
    arguments = ("pda",)

    @property
    def name(self) -> str:
        return "lang pda2cfg"

    @property
    def description(self) -> str:
        return "Triple construction from a push-down automaton, reduced"

    def _run(self, config: RunConfig) -> CommandOutput:
        grammar = reduce_grammar(pda_to_cfg(load_pda(config.inputs[0])))
        text = format_grammar(grammar)
        return CommandOutput(text.rstrip("\n"), {"productions": len(grammar.productions), "grammar": text})


class HotzCommand(CommandBase):
    arguments = ("grammar",)

    @property
    def name(self) -> str:
        return "lang hotz"

    @property
    def description(self) -> str:
        return "Hotz presentation of a reduced grammar with terminal witnesses"

    def _run(self, config: RunConfig) -> CommandOutput:
        presentation = hotz_presentation(reduce_grammar(load_grammar(config.inputs[0])))
        lines = presentation.lines()
        return CommandOutput("\n".join(lines), {
            "generators": list(presentation.generators),
            "relators": [list(r) for r in presentation.relators],
        })


# ==================== gog ====================

class GogWordProblemCommand(CommandBase):
    arguments = ("gog", "word")

    @property
    def name(self) -> str:
        return "gog wp"

    @property
    def description(self) -> str:
        return "Decide whether a word is trivial in the fundamental group (Britton reduction)"

    def _run(self, config: RunConfig) -> CommandOutput:
        trivial = load_gog(config.inputs[0]).word_problem(parse_word(config.inputs[1]))
        return CommandOutput(_verdict(trivial), {"trivial": trivial})


class GogNormalFormCommand(CommandBase):
    arguments = ("gog", "word")

    @property
    def name(self) -> str:
        return "gog normal-form"

    @property
    def description(self) -> str:
        return "S_G normal form of a word"

    def _run(self, config: RunConfig) -> CommandOutput:
        nf = load_gog(config.inputs[0]).normal_form(parse_word(config.inputs[1]), config.fuel)
        return CommandOutput(format_word(nf), {"normal_form": list(nf)})


class GogPresentCommand(CommandBase):
    arguments = ("gog",)

    @property
    def name(self) -> str:
        return "gog present"

    @property
    def description(self) -> str:
        return "Presentation of the fundamental group"

    def _run(self, config: RunConfig) -> CommandOutput:
        presentation = load_gog(config.inputs[0]).pi1_presentation()
        return CommandOutput("\n".join(presentation.lines()), {
            "generators": list(presentation.generators),
            "relators": [list(r) for r in presentation.relators],
        })


class GogBstCommand(CommandBase):
    arguments = ("gog",)

    @property
    def name(self) -> str:
        return "gog bst"

    @property
    def description(self) -> str:
        return "Bass-Serre tree down to --depth (default 2)"

    def _run(self, config: RunConfig) -> CommandOutput:
        tree = bst_ball(load_gog(config.inputs[0]), config.depth or 2)
        named = nx.relabel_nodes(tree, {w: format_word(w) for w in tree.nodes})
        return CommandOutput(format_graph(named).rstrip("\n"), _graph_data(named), graph_to_dot(named, name="BST"))


class GogFreeSubgroupCommand(CommandBase):
    arguments = ("gog",)

    @property
    def name(self) -> str:
        return "gog free-subgroup"

    @property
    def description(self) -> str:
        return "Index and rank of a free normal subgroup of finite index"

    def _run(self, config: RunConfig) -> CommandOutput:
        data = free_subgroup_data(load_gog(config.inputs[0]))
        text = f"degree: {data.degree}\nindex: {data.index}\nrank: {data.rank}"
        return CommandOutput(text, {"degree": data.degree, "index": data.index, "rank": data.rank})


# ==================== pregroup ====================

class PregroupCheckCommand(CommandBase):
    arguments = ("pregroup",)

    @property
    def name(self) -> str:
        return "pregroup check"

    @property
    def description(self) -> str:
        return "Check the pregroup axioms exhaustively"

    def _run(self, config: RunConfig) -> CommandOutput:
        p = load_pregroup(config.inputs[0])
        return CommandOutput(PREGROUP_OK, {"ok": True, "size": p.size, "carrier": list(p.carrier)})


class PregroupFromGogCommand(CommandBase):
    arguments = ("gog",)

    @property
    def name(self) -> str:
        return "pregroup from-gog"

    @property
    def description(self) -> str:
        return "Pregroup of reduced words of length at most one edge letter"

    def _run(self, config: RunConfig) -> CommandOutput:
        p = pregroup_from_gog(load_gog(config.inputs[0])).pregroup
        text = format_pregroup(p)
        return CommandOutput(text.rstrip("\n"), {"size": p.size, "carrier": list(p.carrier), "pregroup": text})


class PregroupWordProblemCommand(CommandBase):
    arguments = ("pregroup", "word")

    @property
    def name(self) -> str:
        return "pregroup wp"

    @property
    def description(self) -> str:
        return "Word problem in the universal group by length-reducing rewriting"

    def _run(self, config: RunConfig) -> CommandOutput:
        trivial = universal_wp(load_pregroup(config.inputs[0]), parse_word(config.inputs[1]))
        return CommandOutput(_verdict(trivial), {"trivial": trivial})


# ==================== cayley ====================

class CayleyBallCommand(CommandBase):
    arguments = ("group",)

    @property
    def name(self) -> str:
        return "cayley ball"

    @property
    def description(self) -> str:
        return "Ball of the Cayley graph around 1 (--radius, --generators)"

    def _run(self, config: RunConfig) -> CommandOutput:
        ball = cayley_ball(load_oracle(config.inputs[0], config.generator_words()), config.radius)
        data = {"radius": ball.graph["radius"], **_graph_data(ball)}
        return CommandOutput(format_graph(ball).rstrip("\n"), data, graph_to_dot(ball, name="Ball"))


class CayleyTreewidthCommand(CommandBase):
    arguments = ("graph",)

    @property
    def name(self) -> str:
        return "cayley treewidth"

    @property
    def description(self) -> str:
        return "Exact treewidth of a small graph, or of the interior of a Cayley ball"

    def _run(self, config: RunConfig) -> CommandOutput:
        ref = config.inputs[0]
        if is_graph_ref(ref):
            graph = load_graph(ref)
        else:
            graph = interior(cayley_ball(load_oracle(ref, config.generator_words()), config.radius))
        width = treewidth_exact(graph)
        return CommandOutput(f"treewidth: {width}", {"treewidth": width, "vertices": graph.number_of_nodes()})


# ==================== td ====================

def _td_data(td: TreeDecomposition) -> Dict[str, Any]:
    return {"bag_size": td.bag_size, "nodes": td.tree.number_of_nodes(), "bags": format_td(td)}


def _checked_td(graph: nx.Graph, td: TreeDecomposition) -> TdReport:
    """
    Raises:
        InputError: if a bag names a vertex the graph does not have.
        AxiomViolation: naming the first of (T1)-(T3) that fails.
    """
    unknown = sorted({v for bag in td.bags.values() for v in bag if v not in graph}, key=str)
    if unknown:
        raise InputError("bags name vertices that are not in the graph", {"vertices": unknown})
    report = validate_td(graph, td)
    if not report.ok:
        raise AxiomViolation(report.axiom, report.message, report.witness)
    return report


class TdValidateCommand(CommandBase):
    arguments = ("graph", "td")

    @property
    def name(self) -> str:
        return "td validate"

    @property
    def description(self) -> str:
        return "Check (T1)-(T3) for a bag file against a graph or a Cayley ball (--radius)"

    def _run(self, config: RunConfig) -> CommandOutput:
        graph, _ = load_host(config.inputs[0], config.generator_words(), config.radius)
        td = load_td(config.inputs[1])
        report = _checked_td(graph, td)
        return CommandOutput(report.describe(), {"ok": True, **_td_data(td)}, td_to_dot(td))


class TdNormalizeCommand(CommandBase):
    arguments = ("graph", "td")

    @property
    def name(self) -> str:
        return "td normalize"

    @property
    def description(self) -> str:
        return "Drop empty bags and contract comparable neighbours of a valid bag file"

    def _run(self, config: RunConfig) -> CommandOutput:
        graph, _ = load_host(config.inputs[0], config.generator_words(), config.radius)
        td = load_td(config.inputs[1])
        _checked_td(graph, td)
        normal = normalize_td(graph, td)
        data = {"nodes_before": td.tree.number_of_nodes(), **_td_data(normal)}
        return CommandOutput(format_td(normal).rstrip("\n"), data, td_to_dot(normal))


class TdCliqueTreeCommand(CommandBase):
    arguments = ("graph",)

    @property
    def name(self) -> str:
        return "td clique-tree"

    @property
    def description(self) -> str:
        return "Maximal-clique tree decomposition of a chordal graph or Cayley ball"

    def _run(self, config: RunConfig) -> CommandOutput:
        graph, _ = load_host(config.inputs[0], config.generator_words(), config.radius)
        td = clique_tree(graph)
        lines = [f"bag size: {td.bag_size}", f"bags: {td.tree.number_of_nodes()}", format_td(td).rstrip("\n")]
        return CommandOutput("\n".join(lines), _td_data(td), td_to_dot(td))


class TdMullerSchuppCommand(CommandBase):
    arguments = ("group",)

    @property
    def name(self) -> str:
        return "td muller-schupp"

    @property
    def description(self) -> str:
        return "Level tree decomposition of a ball, validated on its interior (--k for the 3k bound)"

    def _run(self, config: RunConfig) -> CommandOutput:
        ball = cayley_ball(load_oracle(config.inputs[0], config.generator_words()), config.radius)
        result = muller_schupp_td(ball, config.k)
        lines = [
            f"levels: {result.levels}",
            f"bags: {result.td.tree.number_of_nodes()}",
            f"bag size: {result.td.bag_size}",
            f"max diameter: {result.max_diameter}",
            f"interior: {result.interior_report.describe()}",
        ]
        if result.k is not None:
            lines.append(f"within 3k = {3 * result.k}: {_verdict(result.within_bound)}")
        data = {
            "levels": result.levels,
            "bag_size": result.td.bag_size,
            "max_diameter": result.max_diameter,
            "interior_ok": result.interior_report.ok,
            "sphere_bags": len(result.sphere_nodes),
            "within_bound": result.within_bound,
            "bags": format_td(result.td),
        }
        return CommandOutput("\n".join(lines), data, td_to_dot(result.td))


# ==================== cuts ====================

def _windows(config: RunConfig, graph: nx.Graph, oracle) -> List:
    if oracle is not None:
        return path_family(oracle, graph, margin=config.margin)
    if config.inputs[0] == "builtin:comb":
        return list(comb_windows())
    raise UsageError("paths are only known for groups and the built-in comb", {"input": config.inputs[0]})


class CutsEnumCommand(CommandBase):
    arguments = ("host",)

    @property
    def name(self) -> str:
        return "cuts enum"

    @property
    def description(self) -> str:
        return "Every cut of weight at most --max-k, one side per bond"

    def _run(self, config: RunConfig) -> CommandOutput:
        graph, _ = load_host(config.inputs[0], config.generator_words(), config.radius)
        found = enumerate_kcuts(graph, k=config.max_k)
        lines = [c.describe() for c in found]
        return CommandOutput("\n".join(lines) or "no cuts", {"cuts": [_cut_data(c) for c in found]})


class CutsNestedCommand(CommandBase):
    arguments = ("host", "side", "other_side")

    @property
    def name(self) -> str:
        return "cuts nested"

    @property
    def description(self) -> str:
        return "Whether two cuts, given as comma-separated sides, are nested"

    def _run(self, config: RunConfig) -> CommandOutput:
        graph, _ = load_host(config.inputs[0], config.generator_words(), config.radius)
        c, d = (cut_from_side(graph, [v.strip() for v in side.split(",") if v.strip()]) for side in config.inputs[1:])
        nested = is_nested(c, d)
        sizes = [len(x) for x in corners(c, d)]
        text = f"{'nested' if nested else 'crossing'} (corner sizes {' '.join(str(s) for s in sizes)})"
        return CommandOutput(text, {"nested": nested, "corner_sizes": sizes})


class CutsOptimalCommand(CommandBase):
    arguments = ("host",)

    @property
    def name(self) -> str:
        return "cuts optimal"

    @property
    def description(self) -> str:
        return "Minimal path-splitting cuts with the fewest crossings (--k, --max-k, --margin)"

    def _run(self, config: RunConfig) -> CommandOutput:
        graph, oracle = load_host(config.inputs[0], config.generator_words(), config.radius)
        result = optimal_cuts(graph, _windows(config, graph, oracle), config.k, config.max_k)
        lines = [f"k: {result.k}", f"radius: {result.radius}", f"margin: {result.margin}"]
        lines += [f"{c.describe()} m={result.m_values.get(c.key, 0)}" for c in result.optimal]
        data = {
            "k": result.k,
            "radius": result.radius,
            "margin": result.margin,
            "optimal": [{**_cut_data(c), "m": result.m_values.get(c.key, 0)} for c in result.optimal],
        }
        dot = cut_to_dot(graph, result.optimal[0]) if result.optimal else graph_to_dot(graph)
        return CommandOutput("\n".join(lines), data, dot)


def _run_pipeline(config: RunConfig):
    graph, oracle = load_host(config.inputs[0], config.generator_words(), config.radius)
    windows = _windows(config, graph, oracle)
    return CutsPipeline().run(graph, windows, config.k, config.max_k, config.lambda_)


class StructureTreeCommand(CommandBase):
    arguments = ("host",)

    @property
    def name(self) -> str:
        return "structure-tree"

    @property
    def description(self) -> str:
        return "Structure tree of the optimal cuts"

    def _run(self, config: RunConfig) -> CommandOutput:
        state = _run_pipeline(config)
        tree = state["tree"]
        lines = [f"classes: {tree.graph.number_of_nodes()}", f"edges: {tree.graph.number_of_edges()}"]
        for cid in sorted(tree.graph.nodes):
            lines.append(f"[{cid}] " + " ".join(str(t) for t in sorted(tree.graph.neighbors(cid))))
        data = {
            "classes": [sorted(m) for m in tree.classes],
            "edges": sorted([sorted((s, t)) for s, t in tree.graph.edges]),
            "errors": state["errors"],
        }
        return CommandOutput("\n".join(lines), data, structure_tree_to_dot(tree, state["blocks"]))


class BlocksCommand(CommandBase):
    arguments = ("host",)

    @property
    def name(self) -> str:
        return "blocks"

    @property
    def description(self) -> str:
        return "Blocks of the structure tree and their tree decomposition (--lambda)"

    def _run(self, config: RunConfig) -> CommandOutput:
        state = _run_pipeline(config)
        lines = [f"lambda: {state['lambda_']}"]
        for b in state["blocks"]:
            flags = "" if b.connected else " disconnected"
            flags += " touches sphere" if b.touches_sphere else ""
            lines.append(f"block [{b.class_id}]: {b.size} vertices, {b.cuts} cuts{flags}")
        report = state["blocks_report"]
        if report is not None:
            lines.append(f"decomposition: {report.describe()}")
        lines += [f"warning: {e}" for e in state["errors"]]
        data = {
            "lambda": state["lambda_"],
            "blocks": [
                {"class": b.class_id, "size": b.size, "cuts": b.cuts, "connected": b.connected,
                 "touches_sphere": b.touches_sphere, "vertices": sorted(str(v) for v in b.vertices)}
                for b in state["blocks"]
            ],
            "decomposition_ok": None if report is None else report.ok,
            "errors": state["errors"],
        }
        return CommandOutput("\n".join(lines), data, structure_tree_to_dot(state["tree"], state["blocks"]))


# Command registry
def get_all_commands() -> List[CommandBase]:
    """
    Get all available commands.

    Returns:
        List of instantiated command objects
    """
    return [
        RewriteNormalizeCommand(),
        RewriteConfluenceCommand(),
        NfaToDfaCommand(),
        CfgToPdaCommand(),
        PdaToCfgCommand(),
        HotzCommand(),
        GogWordProblemCommand(),
        GogNormalFormCommand(),
        GogPresentCommand(),
        GogBstCommand(),
        GogFreeSubgroupCommand(),
        PregroupCheckCommand(),
        PregroupFromGogCommand(),
        PregroupWordProblemCommand(),
        CayleyBallCommand(),
        CayleyTreewidthCommand(),
        TdValidateCommand(),
        TdNormalizeCommand(),
        TdCliqueTreeCommand(),
        TdMullerSchuppCommand(),
        CutsEnumCommand(),
        CutsNestedCommand(),
        CutsOptimalCommand(),
        StructureTreeCommand(),
        BlocksCommand(),
    ]


def get_command_by_name(command_name: str) -> CommandBase:
    """
    Get a specific command by name.

    Raises:
        ValueError: If command not found
    """
    commands = {command.name: command for command in get_all_commands()}

    if command_name not in commands:
        raise ValueError(f"Command '{command_name}' not found. Available commands: {list(commands.keys())}")

    return commands[command_name]
