"""Figure rendering for the bench subcommand.

matplotlib is imported lazily so that every non-plotting code path works
without it ever being loaded.
"""

from __future__ import annotations


def render_bench_figure(rows, path, base_name="base"):
    """Plot direct vs factored wall times against the fiber size.

    rows: iterable of (n, t_direct, t_factored) in seconds.
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = sorted(rows)
    ns = [r[0] for r in rows]
    direct = [r[1] for r in rows]
    factored = [r[2] for r in rows]

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ns, direct, marker="o", label="direct")
    ax.plot(ns, factored, marker="s", label="factored")
    ax.set_xlabel("fiber size n")
    ax.set_ylabel("seconds")
    ax.set_yscale("log")
    ax.set_title(f"bundle polynomial over {base_name}, fiber K_n")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
