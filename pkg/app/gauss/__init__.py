from app.gauss.sums import alternating_side, gauss_route, gauss_sum, van_wamelen_residual, working_bits
from app.gauss.lehmer import (
    LehmerCircle,
    LehmerReport,
    LehmerRow,
    fresnel_by_quadrature,
    fresnel_point,
    lehmer_center,
    lehmer_circle,
    lehmer_radius,
    lehmer_range,
    lehmer_scan,
)
from app.gauss.scan import ScanRow, angle_constants, scan_value, sign_pattern_threshold, sign_scan, write_csv
from app.gauss.plot import render_svg

__all__ = [
    "alternating_side", "gauss_route", "gauss_sum", "van_wamelen_residual", "working_bits",
    "LehmerCircle", "LehmerReport", "LehmerRow", "fresnel_by_quadrature", "fresnel_point",
    "lehmer_center", "lehmer_circle", "lehmer_radius", "lehmer_range", "lehmer_scan",
    "ScanRow", "angle_constants", "scan_value", "sign_pattern_threshold", "sign_scan", "write_csv",
    "render_svg",
]
