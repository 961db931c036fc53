"""Numerical toolkit for the univalence and starlikeness radii of f/f'."""
from .errors import GFTError
from .operators import AnalyticFunction, log_coeffs, p_of, t_of, u_of, u_series_of_p, wplane_q, wplane_s
from .series import PowerSeries

__version__ = "0.1.0"
