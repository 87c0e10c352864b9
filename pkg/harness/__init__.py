from harness.experiment import (
    CSV_COLUMNS,
    ExperimentConfig,
    SweepResult,
    SweepRow,
    build_constraint,
    compare_diversity,
    degree_partition,
    objective_gaps,
    parse_constraint_spec,
    read_sweep_csv,
    run_sweep,
    run_sweep_async,
    ss_bound,
    write_sweep_csv,
)
from harness.plots import emit_g_plot, emit_plot
from harness.suites import SUITES, SuiteReport, run_suite, run_suites
