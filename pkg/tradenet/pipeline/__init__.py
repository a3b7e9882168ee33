"""Study orchestration: yearly centralities, GDP weighting, correlation reports."""

from tradenet.pipeline.series import (
    CountrySeries,
    Panel,
    aligned,
    assign_groups,
    centrality_series,
    centrality_vectors,
    weighted_gdp,
)
from tradenet.pipeline.studies import (
    IN_VS_GDP,
    IN_VS_OUT,
    OUT_VS_GDP,
    SKIP_INSUFFICIENT_OVERLAP,
    SKIP_ZERO_VARIANCE,
    GdpRow,
    InOutRow,
    Skip,
    StudyKind,
    StudyReport,
    StudyRow,
    gdp_study,
    inout_study,
    report_from_results,
    subset_report,
)

__all__ = [
    "CountrySeries",
    "GdpRow",
    "IN_VS_GDP",
    "IN_VS_OUT",
    "InOutRow",
    "OUT_VS_GDP",
    "Panel",
    "SKIP_INSUFFICIENT_OVERLAP",
    "SKIP_ZERO_VARIANCE",
    "Skip",
    "StudyKind",
    "StudyReport",
    "StudyRow",
    "aligned",
    "assign_groups",
    "centrality_series",
    "centrality_vectors",
    "gdp_study",
    "inout_study",
    "report_from_results",
    "subset_report",
    "weighted_gdp",
]
