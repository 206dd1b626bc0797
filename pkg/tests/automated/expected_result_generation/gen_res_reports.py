import os

from temporal_graph_tools import AnalysisConfig, ReportUtils
from tests.conftest import TESTS_DIR, TOY_CORPUS_CONFIG


def gen_res_reports(output_dir):

    config = AnalysisConfig.from_file(TOY_CORPUS_CONFIG, output_dir=output_dir)
    corpus = config.load_corpus()
    ReportUtils.run_metrics_report(config, corpus)

    tvg = ReportUtils.temporal_graph(corpus, 'gi', config.threshold)
    snapshots = ReportUtils.snapshot_graphs(tvg, config.snapshot_step, config.snapshot_start)
    ReportUtils.community_snapshot_table(snapshots).write(os.path.join(output_dir, 'community_table.csv'))


if __name__ == "__main__":
    # Get the directory of the current script
    current_dir = os.path.dirname(os.path.abspath(__file__))
    output_dir = os.path.join(current_dir, 'generated')

    # Record paths in the configuration are relative to the tests folder
    os.chdir(TESTS_DIR)

    gen_res_reports(output_dir)
