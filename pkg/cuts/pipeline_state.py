"""LangGraph state schema for the cuts pipeline."""
import operator
from typing import Annotated, List, Optional, TypedDict

import networkx as nx

from cayley_tw import TdReport
from .cut import Cut
from .optimal import OptimalCuts
from .paths import PathWindow
from .structure import Block, StructureTree


class CutsState(TypedDict):
    """
    State that flows through the cuts pipeline.

    Each stage reads what the previous ones produced and returns its
    updates; list fields marked with operator.add accumulate.
    """
    # Input
    graph: nx.Graph
    windows: List[PathWindow]
    k: Optional[int]
    max_k: int
    lambda_: Optional[int]

    # Stage 1: enumeration
    candidates: List[Cut]

    # Stage 2: optimal cuts
    optimal: Optional[OptimalCuts]

    # Stage 3: structure tree
    tree: Optional[StructureTree]

    # Stage 4: blocks
    blocks: List[Block]
    blocks_report: Optional[TdReport]

    # Execution tracking
    errors: Annotated[List[str], operator.add]
    stages_completed: Annotated[List[str], operator.add]
