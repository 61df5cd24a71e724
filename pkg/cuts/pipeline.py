"""LangGraph pipeline from a ball and path windows to blocks of the structure tree."""
import logging
import time
from typing import Any, Dict, Optional, Sequence

import networkx as nx
from langgraph.graph import END, START, StateGraph
from langgraph.graph.state import CompiledStateGraph

from config import settings
from .cut import enumerate_kcuts, is_nested
from .optimal import optimal_cuts
from .paths import PathWindow
from .pipeline_state import CutsState
from .structure import blocks, blocks_tree_decomposition, choose_lambda, structure_tree, validate_blocks

logger = logging.getLogger(__name__)

STAGES = ["enumerate_cuts", "select_optimal", "build_structure_tree", "compute_blocks"]


class CutsNodes:
    """
    The pipeline stages as graph nodes.

    Each method:
    - Receives the current state
    - Runs one stage
    - Returns updates to merge into state
    """

    def enumerate_cuts_node(self, state: CutsState) -> Dict[str, Any]:
        logger.info("✂️ [Enumerate] Starting...")
        seeds = {v for w in state["windows"] for v in w.vertices}
        candidates = enumerate_kcuts(state["graph"], seeds, state["max_k"]) if seeds else []
        logger.info(f"✅ [Enumerate] {len(candidates)} candidate cuts")
        return {"candidates": candidates, "stages_completed": ["enumerate_cuts"]}

    def select_optimal_node(self, state: CutsState) -> Dict[str, Any]:
        logger.info("🎯 [Optimal] Starting...")
        result = optimal_cuts(state["graph"], state["windows"], state["k"], state["max_k"], state["candidates"])
        errors = []
        for i, c in enumerate(result.optimal):
            for d in result.optimal[i + 1:]:
                if not is_nested(c, d):
                    errors.append(f"crossing optimal cuts: {c.describe()} / {d.describe()}")
        if errors:
            logger.warning(f"⚠️ [Optimal] {len(errors)} crossing pairs")
        logger.info(f"✅ [Optimal] {len(result.optimal)} optimal cuts")
        return {"optimal": result, "errors": errors, "stages_completed": ["select_optimal"]}

    def structure_tree_node(self, state: CutsState) -> Dict[str, Any]:
        logger.info("🌳 [StructureTree] Starting...")
        tree = structure_tree(state["optimal"].optimal)
        logger.info(f"✅ [StructureTree] {tree.graph.number_of_nodes()} vertices")
        return {"tree": tree, "stages_completed": ["build_structure_tree"]}

    def blocks_node(self, state: CutsState) -> Dict[str, Any]:
        logger.info("🧱 [Blocks] Starting...")
        graph, tree = state["graph"], state["tree"]
        ell = state["lambda_"] or choose_lambda(graph, tree.cuts)
        found = blocks(graph, tree, ell)
        report = None
        errors = []
        if found:
            report = validate_blocks(graph, blocks_tree_decomposition(graph, tree, found))
            if not report.ok:
                errors.append(f"blocks: {report.describe()}")
        disconnected = [b.class_id for b in found if not b.connected]
        if disconnected:
            errors.append(f"disconnected blocks: {disconnected}")
        logger.info(f"✅ [Blocks] {len(found)} blocks at lambda = {ell}")
        return {"blocks": found, "lambda_": ell, "blocks_report": report, "errors": errors,
                "stages_completed": ["compute_blocks"]}


class CutsPipeline:
    """
    Staged computation of optimal cuts, the structure tree and blocks.

    The stages run in order as a LangGraph state graph:
    1. enumerate_cuts - k-cuts meeting the path windows
    2. select_optimal - minimal splitting cuts with least crossing count
    3. build_structure_tree - ~-classes and the tree check
    4. compute_blocks - lambda, blocks and their tree decomposition
    """

    def __init__(self):
        self.nodes = CutsNodes()
        self.graph = self._build_graph()

    def _build_graph(self) -> CompiledStateGraph:
        logger.debug("🔧 Building cuts pipeline...")
        workflow = StateGraph(CutsState)
        workflow.add_node("enumerate_cuts", self.nodes.enumerate_cuts_node)
        workflow.add_node("select_optimal", self.nodes.select_optimal_node)
        workflow.add_node("build_structure_tree", self.nodes.structure_tree_node)
        workflow.add_node("compute_blocks", self.nodes.blocks_node)

        workflow.add_edge(START, "enumerate_cuts")
        workflow.add_edge("enumerate_cuts", "select_optimal")
        workflow.add_edge("select_optimal", "build_structure_tree")
        workflow.add_edge("build_structure_tree", "compute_blocks")
        workflow.add_edge("compute_blocks", END)
        return workflow.compile()

    def run(
        self,
        graph: nx.Graph,
        windows: Sequence[PathWindow],
        k: Optional[int] = None,
        max_k: Optional[int] = None,
        lambda_: Optional[int] = None,
    ) -> CutsState:
        """
        Execute every stage.

        Raises:
            WorkbenchError: from the stage that failed.
        """
        logger.info(f"🚀 cuts pipeline on {graph.number_of_nodes()} vertices with {len(windows)} windows")
        start = time.time()
        initial: CutsState = {
            "graph": graph,
            "windows": list(windows),
            "k": k,
            "max_k": settings.DEFAULT_MAX_CUT_WEIGHT if max_k is None else max_k,
            "lambda_": lambda_,
            "candidates": [],
            "optimal": None,
            "tree": None,
            "blocks": [],
            "blocks_report": None,
            "errors": [],
            "stages_completed": [],
        }
        final = self.graph.invoke(initial)
        logger.info(f"🏁 cuts pipeline complete in {time.time() - start:.2f}s: {final['stages_completed']}")
        return final
