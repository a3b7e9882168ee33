"""Trade matrix construction and normalization."""

from tradenet.network.matrices import (
    AdjacencyMatrix,
    CountryIndex,
    FlowRecord,
    TradeMatrix,
    build_trade_matrix,
    normalize,
)

__all__ = [
    "AdjacencyMatrix",
    "CountryIndex",
    "FlowRecord",
    "TradeMatrix",
    "build_trade_matrix",
    "normalize",
]
