"""Reference values for the evaluation metrics, computed with scipy and by hand."""
from scipy import stats

a = [0.81, 0.77, 0.92, 0.64, 0.70, 0.88]
b = [0.79, 0.71, 0.90, 0.66, 0.61, 0.80]
r = stats.ttest_rel(a, b)
print("paired t", repr(float(r.statistic)), "p", repr(float(r.pvalue)))

rho = stats.spearmanr([1, 2, 3, 4], [2, 1, 4, 3]).statistic
print("spearman", repr(float(rho)))
tied = stats.spearmanr([1, 1, 2, 3, 5], [4, 2, 2, 3, 1]).statistic
print("spearman with ties", repr(float(tied)))
