#!/usr/bin/env python3
"""Fit the bundled AP-count series and project the next doubling."""

from rfplan import fixtures
from rfplan.growth import fit_doubling, predict_doubling_date, read_count_series


def main():
    series = read_count_series(fixtures.ap_counts_path())
    fit = fit_doubling(series)
    last_t, last_count = series.points[-1]
    print(f"points           {len(series.points)}")
    print(f"doubling period  {fit.doubling_days:.1f} days "
          f"({fit.doubling_days / 365.25:.2f} years)")
    print(f"r squared        {fit.r_squared:.6f}")
    print(f"last sample      t = {last_t:.0f} d, count = {last_count:.0f}")
    print(f"next doubling    t = {predict_doubling_date(fit, last_t):.0f} d "
          f"(count ~ {2 * last_count:.0f})")


if __name__ == "__main__":
    main()
