"""Figure of the worst kernel-period extension per period against the thresholds."""

from __future__ import annotations

from pathlib import Path

from .index import WordIndex
from .verifier import VerifierConfig, period_profile, scan_periods


def plot_period_profile(idx: WordIndex, cfg: VerifierConfig, path: str | Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    profile = period_profile(idx, scan_periods(idx, cfg))
    qs = sorted(profile)
    ratios = [profile[q][0] / q for q in qs]
    n = cfg.n
    # R1 as a ratio: (n-1)(L+1) >= nq-3  <=>  L/q >= (nq - 3 - (n-1)) / ((n-1) q)
    low = [q for q in qs if q <= cfg.q_max]
    r1 = [(n * q - n - 2) / ((n - 1) * q) for q in low]
    right = max(qs[-1] if qs else cfg.q_max, cfg.q_max)

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.scatter(qs, ratios, s=4, color="k", label="max |v|/q over kernel windows")
    ax.plot(low, r1, color="tab:red", lw=1, label=f"R1 boundary (n={n})")
    ax.hlines(float(cfg.r2_threshold), 0, cfg.q_max, color="tab:blue", lw=1, ls="--", label="R2 threshold")
    if cfg.scan_eq1:
        ax.hlines(float(cfg.eq1_threshold), cfg.q_max, right, color="tab:green", lw=1, ls=":", label="EQ1 threshold")
    ax.axvline(cfg.q_max, color="0.5", lw=0.8)
    ax.set_xlabel("kernel period q")
    ax.set_ylabel("|v| / q")
    ax.set_ylim(0.995, max([float(cfg.eq1_threshold), *ratios]) + 0.015)
    ax.legend(loc="upper right", fontsize=8, ncol=2)
    ax.set_title(f"test word of length {len(idx)}", fontsize=10)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
