"""Figure rendering for the report subcommands.

Each function takes an already-computed report payload and writes one
figure to a file.  Matplotlib is imported lazily with the Agg backend so
that plain computations never touch it and standard output stays pure
JSON.
"""

from __future__ import annotations

from fractions import Fraction


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def plot_threshold_report(report: list[dict], path: str, title: str) -> None:
    """Predicted vs computed equality flags per exponent."""
    plt = _pyplot()
    ks = [entry["k"] for entry in report]
    predicted = [1 if entry["predicted_equal"] else 0 for entry in report]
    computed = [1 if entry["computed_equal"] else 0 for entry in report]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.step(ks, predicted, where="mid", label="predicted equal", lw=2)
    ax.plot(ks, computed, "o", label="computed equal", color="crimson")
    ax.set_xlabel("exponent k")
    ax.set_yticks([0, 1], ["differ", "equal"])
    ax.set_xticks(ks)
    ax.set_ylim(-0.2, 1.2)
    ax.set_title(title)
    ax.legend(loc="center right")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_waldschmidt(sequence: list[Fraction], exact: Fraction, path: str) -> None:
    """The quotients alpha(I^(m))/m against the exact limit."""
    plt = _pyplot()
    ms = list(range(1, len(sequence) + 1))
    values = [float(q) for q in sequence]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.plot(ms, values, "o-", label="alpha(I^(m)) / m")
    ax.axhline(float(exact), color="crimson", ls="--", label=f"limit = {exact}")
    ax.set_xlabel("m")
    ax.set_ylabel("initial degree quotient")
    ax.set_xticks(ms)
    ax.set_title("Waldschmidt constant")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_resurgence(payload: dict, up_to: int, path: str) -> None:
    """Containment failures (m, n) with the certified resurgence bounds."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 5))
    held = [
        (m, n)
        for n in range(1, up_to + 1)
        for m in range(1, n + 1)
        if [n, m] not in payload["failures"]
    ]
    if held:
        ax.scatter(*zip(*held), marker=".", color="gray", label="contained")
    failures = [(m, n) for n, m in payload["failures"]]
    if failures:
        ax.scatter(*zip(*failures), marker="x", color="crimson", label="not contained")
    lower = Fraction(payload["rho_lower"]["num"], payload["rho_lower"]["den"])
    xs = [0, up_to]
    ax.plot(xs, [float(lower) * x for x in xs], "--", color="navy",
            label=f"n = {lower} m (rho lower bound)")
    ax.set_xlabel("ordinary exponent m")
    ax.set_ylabel("symbolic exponent n")
    ax.set_xlim(0.5, up_to + 0.5)
    ax.set_ylim(0.5, up_to + 0.5)
    ax.set_title("containment failures")
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_hunt(payload: dict, path: str) -> None:
    """Agreement summary of a hunt run."""
    plt = _pyplot()
    total = payload["instance_count"]
    bad = len(payload["disagreements"])
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(["agree", "disagree"], [total - bad, bad], color=["seagreen", "crimson"])
    ax.set_ylabel("instances")
    ax.set_title(
        f"{payload['family']}, k={payload['k']}, seed={payload['seed']}"
    )
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
