"""Convergence-order measurement and the tuned scaling.

Subtracting each correction term raises the convergence order by one;
replacing N by N + p inside the scaling map removes the 1/N term without
knowing the correction, and for the circular ensemble (p = q = 0) the
correction vanishes outright.
"""
from specsing import EnsembleParams, kernel_residual_scan, tuned_scaling_residual

X, Y = 2.0, 0.9
N_LIST = [100, 200, 400, 800]

print("=== residual slopes, beta = 2, (p, q) = (1.5, 0.7) ===")
pr = EnsembleParams(2, 100, 1.5, 0.7)
for order in (0, 1, 2):
    rep = kernel_residual_scan(2, X, Y, pr, N_LIST, order)
    print(f"order {order}: slope = {rep.fitted_slope:+.3f} (r2 = {rep.fit_r2:.5f})"
          f"   residuals {[f'{r:.2e}' for r in rep.residuals]}")

print("\n=== beta = 1 and beta = 4 ===")
for beta, pq in ((1, (1.5, 0.7)), (4, (0.8, 0.4))):
    pr = EnsembleParams(beta, 50, *pq)
    for order in (0, 1):
        rep = kernel_residual_scan(beta, X, Y, pr, [50, 100, 200, 400], order)
        print(f"beta={beta} order {order}: slope = {rep.fitted_slope:+.3f}")

print("\n=== tuned scaling N -> N + p ===")
for beta in (1, 2, 4):
    pq = (1.5, 0.7) if beta != 4 else (0.8, 0.4)
    pr = EnsembleParams(beta, 50, *pq)
    rep = tuned_scaling_residual(beta, X, Y, pr, [50, 100, 200, 400])
    print(f"beta={beta}: tuned order-0 slope = {rep.fitted_slope:+.3f}")

print("\n=== circular ensemble p = q = 0: no shift needed ===")
pr0 = EnsembleParams(2, 100, 0.0, 0.0)
rep = kernel_residual_scan(2, X, Y, pr0, N_LIST, 0)
print(f"untuned order-0 slope = {rep.fitted_slope:+.3f} (already O(1/N^2))")
