"""CSV result repository plus a gnuplot script writer for its files."""

import csv
import logging
from itertools import groupby
from pathlib import Path
from typing import List, Optional

from ...domain.repositories.result_repository import ResultRepository
from ...domain.value_objects.result_row import CSV_COLUMNS, ResultRow

logger = logging.getLogger(__name__)


class CsvResultRepository(ResultRepository):
    """
    File-based implementation of ResultRepository.

    One header line with the fixed column order, then one line per row sorted
    by ResultRow.sort_key. An optional comment line starting with '#' may
    precede the header.
    """

    def save(self, rows: List[ResultRow], path: str, comment: Optional[str] = None) -> Path:
        """Save rows as CSV."""
        file_path = Path(path)
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            with open(file_path, "w", encoding="utf-8", newline="") as f:
                if comment:
                    f.write(f"# {comment}\n")
                writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS, lineterminator="\n")
                writer.writeheader()
                for row in sorted(rows, key=ResultRow.sort_key):
                    writer.writerow(row.to_record())
        except OSError as e:
            logger.error(f"Failed to write results to {file_path}: {str(e)}")
            raise

        logger.info(f"💾 Saved {len(rows)} rows to {file_path}")
        return file_path

    def write_gnuplot_script(
        self,
        csv_path: Path,
        rows: List[ResultRow],
        x_label: str,
        log_x: Optional[int] = None,
    ) -> Path:
        """
        Write `<csv>.gp` plotting throughput against the sweep value, one curve per
        (sweep name, mode, engine). Replication rows are left out.

        Returns:
            Path of the script
        """
        script_path = csv_path.with_suffix(".gp")
        columns = {name: index + 1 for index, name in enumerate(CSV_COLUMNS)}
        curves = sorted(
            {(r.sweep_name, r.mode.value, r.engine.value) for r in rows if not isinstance(r.replication, int)}
        )

        lines = [
            'set datafile separator ","',
            f'set xlabel "{x_label}"',
            'set ylabel "Throughput"',
            "set yrange [0:1]",
            "set key bottom right",
            "set grid",
        ]
        if log_x:
            lines.append(f"set logscale x {log_x}")

        plots = []
        for (name, mode), group in groupby(curves, key=lambda c: c[:2]):
            for _, _, engine in group:
                style = "lines" if engine == "analytic" else "points"
                selector = (
                    f"$1==\\\"{name}\\\" && $3==\\\"{mode}\\\" && $4==\\\"{engine}\\\" && $5!~/^[0-9]/"
                )
                plots.append(
                    f"\"< awk -F, '{selector}' {csv_path.name}\" "
                    f"using {columns['sweep_value']}:{columns['throughput']} "
                    f'with {style} title "{name} {mode} {engine}"'
                )
        if plots:
            lines.append("plot " + ", \\\n     ".join(plots))

        try:
            script_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        except OSError as e:
            logger.error(f"Failed to write gnuplot script {script_path}: {str(e)}")
            raise

        logger.info(f"📈 Wrote gnuplot script {script_path}")
        return script_path
