"""Loading the inputs a command names on its flags."""

from pathlib import Path
from typing import Callable, List, Optional

from tradenet.cli.flags import RunConfig
from tradenet.errors import EmptyInput, TradenetError
from tradenet.io import load_trade_source, parse_groups, parse_series, values_for_year
from tradenet.logging_setup import get_logger
from tradenet.network import AdjacencyMatrix, CountryIndex, normalize
from tradenet.pipeline import assign_groups
from tradenet.stats import GroupAssignment

logger = get_logger(__name__)


def load_networks(trade: Path, keep: Callable[[int], bool] = lambda year: True) -> List[AdjacencyMatrix]:
    """
    Normalized networks for every kept year of a trade source, in year order.

    Raises:
        EmptyInput: If no year passes ``keep``.
        AllZeroMatrix: Tagged with the year whose table is empty.
    """
    matrices = [m for m in load_trade_source(trade) if keep(m.year)]
    if not matrices:
        raise EmptyInput(f"No trade data in {trade} for the selected years")
    networks = []
    for matrix in matrices:
        try:
            networks.append(normalize(matrix))
        except TradenetError as exc:
            raise exc.with_year(matrix.year)
    logger.debug("Normalized %d networks", len(networks), extra={"category": "io"})
    return networks


def load_groups(run: RunConfig, index: CountryIndex) -> Optional[GroupAssignment]:
    """
    Groups from an explicit file or from per-capita income in the reference year.

    Raises:
        MissingGroup: If the groups file omits a country of the index.
        MissingValue: If a country has no per-capita value in the reference year.
    """
    if run.groups is not None:
        return parse_groups(run.groups).restricted(index.names)
    if run.per_capita is not None:
        panel = parse_series(run.per_capita, "per_capita")
        return assign_groups(values_for_year(panel, run.reference_year), index)  # type: ignore[arg-type]
    return None
