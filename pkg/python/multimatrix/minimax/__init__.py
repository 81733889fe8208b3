from multimatrix.minimax.duality import (
    DualityReport,
    ScanFinding,
    ScanMode,
    ScanReport,
    duality_gap,
    exhaustive_instance,
    gap_scan,
    random_instance,
)
from multimatrix.minimax.solver import (
    CoverCertificate,
    MatchingCertificate,
    max_line_matching,
    max_rplane_matching,
    min_line_cover,
    min_rplane_cover,
    verify_cover,
    verify_matching,
)

__all__ = [
    "CoverCertificate",
    "DualityReport",
    "MatchingCertificate",
    "ScanFinding",
    "ScanMode",
    "ScanReport",
    "duality_gap",
    "exhaustive_instance",
    "gap_scan",
    "max_line_matching",
    "max_rplane_matching",
    "min_line_cover",
    "min_rplane_cover",
    "random_instance",
    "verify_cover",
    "verify_matching",
]
