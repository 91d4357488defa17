"""
Report generation utilities for different output formats.
"""

import csv
import io
import json
import math
import re
from datetime import datetime
from typing import Dict, List, Optional, Sequence, Tuple

from .candidate_sets import MulticastPlan, SolverConfig
from .config import (
    BOLD, CSV_COLUMNS, CSV_SCHEMA_HEADER, GREEN, GREY, RESET, STRATEGY_LABELS, YELLOW,
)
from .geometry import Scenario
from .row_factory import PLAN_COLUMNS, create_plan_rows, create_sweep_row
from .simulator import SweepResult
from .utils import bits_to_gb, remove_ansi_colors

# (plan, average throughput, solver seconds)
PlanEntry = Tuple[MulticastPlan, float, float]

# =============================================================================
# CSV OUTPUT
# =============================================================================

def _csv_text(columns, rows, header_line=None):
    buffer = io.StringIO()
    if header_line:
        buffer.write(header_line + "\n")
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def render_sweep_csv(results: Sequence[SweepResult], digits: int = 9) -> str:
    """Sweep CSV: schema line, header, one row per (axis_value, strategy) in that order."""
    rows = []
    for result in sorted(results, key=lambda r: r.axis_value):
        for strategy in sorted(result.means):
            means = result.means[strategy]
            rows.append(create_sweep_row(
                axis_name=result.axis_name,
                axis_value=result.axis_value,
                strategy=strategy,
                trials=result.trials,
                mean_delay=means.mean_delay,
                mean_throughput=means.mean_average_throughput,
                mean_solver_time=means.mean_solver_time,
                digits=digits,
            ))
    return _csv_text(CSV_COLUMNS, rows, CSV_SCHEMA_HEADER)


def render_plans_csv(entries: Sequence[PlanEntry], scenario: Scenario, digits: int = 9) -> str:
    """Per-set plan CSV for the solve command."""
    rows = []
    for plan, throughput, _ in entries:
        rows.extend(create_plan_rows(plan, scenario, throughput, digits))
    return _csv_text(PLAN_COLUMNS, rows, "# fso-multicast-plan schema=1")

# =============================================================================
# HUMAN-READABLE SUMMARIES
# =============================================================================

def _markdownify(result):
    result = result.replace(BOLD, "**").replace(RESET, "**")
    return re.sub(r"\033\[[0-9;]*m", "", result)


def format_plan_summary(plan: MulticastPlan, scenario: Scenario, config: SolverConfig,
                        average_throughput: float, solver_time: Optional[float] = None,
                        markdown: bool = False) -> str:
    """Format one plan for display, angles in degrees and sizes in GB."""
    label = STRATEGY_LABELS.get(plan.strategy, plan.strategy)
    lines = [f"\n{BOLD}📡 {label} [{plan.strategy}]{RESET}"]
    lines.append(f"{GREY}{'-' * 40}{RESET}")
    for index, s in enumerate(plan.sets, 1):
        ids = ", ".join(str(scenario.nodes[i].id) for i in s.indices)
        lines.append(
            f"  Set {index}: nodes [{ids}]  θ={math.degrees(s.theta):.4f}°  delay={s.delay:.6f} s"
        )
    lines.append(f"  Total delay: {plan.total_delay:.6f} s over {plan.set_count} transmission(s)")
    lines.append(f"  Average throughput: {average_throughput / 1e9:.4f} Gbit/s "
                 f"({bits_to_gb(config.data_size):g} GB per node)")
    if solver_time is not None:
        lines.append(f"{GREY}  Solver time: {solver_time * 1e3:.3f} ms{RESET}")
    for key, value in plan.diagnostics.items():
        lines.append(f"{GREY}  {key}: {value}{RESET}")

    result = "\n".join(lines)
    if markdown:
        result = _markdownify(result)
    return result


def comparison_rows(entries: Sequence[PlanEntry]) -> List[Dict]:
    """Rows of the strategy comparison, with the gap to the best total delay."""
    best = min(plan.total_delay for plan, _, _ in entries)
    rows = []
    for plan, throughput, elapsed in entries:
        gap = 0.0 if best <= 0 else (plan.total_delay - best) / best * 100.0
        rows.append({
            "strategy": plan.strategy,
            "label": STRATEGY_LABELS.get(plan.strategy, plan.strategy),
            "total_delay_s": plan.total_delay,
            "avg_throughput_bps": throughput,
            "sets": plan.set_count,
            "solver_time_s": elapsed,
            "gap_percent": gap,
        })
    return rows


def format_comparison(entries: Sequence[PlanEntry], markdown: bool = False) -> str:
    """Side-by-side table of strategies on one scenario."""
    rows = comparison_rows(entries)
    if markdown:
        lines = [
            "| Strategy | Total delay (s) | Avg throughput (Gbit/s) | Sets | Solver time (ms) | Gap (%) |",
            "|---|---:|---:|---:|---:|---:|",
        ]
        for r in rows:
            lines.append(
                f"| {r['label']} | {r['total_delay_s']:.6f} | {r['avg_throughput_bps'] / 1e9:.4f} "
                f"| {r['sets']} | {r['solver_time_s'] * 1e3:.3f} | {r['gap_percent']:.2f} |"
            )
        return "\n".join(lines)

    lines = [f"\n{BOLD}📊 Strategy Comparison{RESET}", f"{GREY}{'=' * 86}{RESET}"]
    lines.append(f"{'Strategy':<18}{'Delay (s)':>14}{'Thru (Gbit/s)':>16}{'Sets':>6}"
                 f"{'Time (ms)':>12}{'Gap (%)':>10}")
    for r in rows:
        color = GREEN if r["gap_percent"] == 0.0 else YELLOW
        lines.append(
            f"{color}{r['label']:<18}{r['total_delay_s']:>14.6f}{r['avg_throughput_bps'] / 1e9:>16.4f}"
            f"{r['sets']:>6}{r['solver_time_s'] * 1e3:>12.3f}{r['gap_percent']:>10.2f}{RESET}"
        )
    return "\n".join(lines)


def comparison_json(entries: Sequence[PlanEntry], scenario: Scenario) -> str:
    """Machine-readable comparison including every plan's sets."""
    plans = []
    for (plan, _, _), row in zip(entries, comparison_rows(entries)):
        row = dict(row)
        row["sets"] = [
            {"first": s.first, "last": s.last,
             "node_ids": [scenario.nodes[i].id for i in s.indices],
             "theta_rad": s.theta, "delay_s": s.delay}
            for s in plan.sets
        ]
        row["diagnostics"] = plan.diagnostics
        plans.append(row)
    return json.dumps({"node_count": len(scenario), "gps_error": scenario.gps_error, "plans": plans},
                      indent=2)

# =============================================================================
# HTML REPORT
# =============================================================================

def generate_html_report(out_path: str, entries: Sequence[PlanEntry], scenario: Scenario,
                         config: SolverConfig) -> str:
    """Render the strategy comparison as a standalone HTML page."""
    try:
        from jinja2 import Template
    except ImportError:
        print(f"Jinja2 is required for HTML report generation. Install with 'pip install jinja2'.")
        return None

    html_template = '''
    <!DOCTYPE html>
    <html lang="en">
    <head>
        <meta charset="UTF-8">
        <title>FSO Multicast Plan Report</title>
        <style>
            body { font-family: Arial, sans-serif; background: #f8f8f8; color: #222; }
            .container { max-width: 900px; margin: 2em auto; background: #fff; padding: 2em; border-radius: 8px; box-shadow: 0 2px 8px #0001; }
            h1 { color: #2d5be3; }
            table { border-collapse: collapse; width: 100%; }
            th, td { padding: 0.4em 0.8em; border-bottom: 1px solid #ddd; text-align: right; }
            th:first-child, td:first-child { text-align: left; }
            .best { background: #e8f5e9; }
            .section { margin-bottom: 2em; }
            .timestamp { color: #888; font-size: 0.9em; }
        </style>
    </head>
    <body>
        <div class="container">
            <h1>FSO Multicast Plan Report</h1>
            <div class="timestamp">Generated: {{ timestamp }}</div>
            <div class="section">
                <h2>Scenario</h2>
                <p>{{ node_count }} receivers, GPS error {{ gps_error }} m,
                   {{ data_gb }} GB per receiver, alignment delay {{ alignment_delay }} s.</p>
            </div>
            <div class="section">
                <h2>Strategies</h2>
                <table>
                    <tr><th>Strategy</th><th>Total delay (s)</th><th>Avg throughput (Gbit/s)</th>
                        <th>Sets</th><th>Solver time (ms)</th><th>Gap (%)</th></tr>
                    {% for r in rows %}
                    <tr class="{{ 'best' if r.gap_percent == 0 else '' }}">
                        <td>{{ r.label }}</td>
                        <td>{{ '%.6f' % r.total_delay_s }}</td>
                        <td>{{ '%.4f' % (r.avg_throughput_bps / 1e9) }}</td>
                        <td>{{ r.sets }}</td>
                        <td>{{ '%.3f' % (r.solver_time_s * 1000) }}</td>
                        <td>{{ '%.2f' % r.gap_percent }}</td>
                    </tr>
                    {% endfor %}
                </table>
            </div>
            {% for p in plans %}
            <div class="section">
                <h2>{{ p.label }}</h2>
                <pre>{{ p.text }}</pre>
            </div>
            {% endfor %}
        </div>
    </body>
    </html>
    '''

    plans = [
        {"label": STRATEGY_LABELS.get(plan.strategy, plan.strategy),
         "text": remove_ansi_colors(format_plan_summary(plan, scenario, config, throughput))}
        for plan, throughput, _ in entries
    ]
    template = Template(html_template)
    html = template.render(
        timestamp=datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
        node_count=len(scenario),
        gps_error=scenario.gps_error,
        data_gb=f"{bits_to_gb(config.data_size):g}",
        alignment_delay=config.alignment_delay,
        rows=comparison_rows(entries),
        plans=plans,
    )

    with open(out_path, "w", encoding="utf-8") as f:
        f.write(html)
    print(f"{GREEN}HTML report generated at: {out_path}{RESET}")
    return out_path
