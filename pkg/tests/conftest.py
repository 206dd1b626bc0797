import os
import random

prev_path = os.getcwd()

# Get the directory of the current script (conftest.py)
current_dir = os.path.dirname(os.path.abspath(__file__))

# Set the current working directory to the directory of conftest.py
os.chdir(current_dir)

TESTS_DIR = current_dir

TOY_CORPUS_RECORDS = os.path.abspath(r"resources/toy_corpus/records.tsv")
TOY_CORPUS_CONFIG = os.path.abspath(r"resources/toy_corpus/analysis.cfg")
TOY_CORPUS_INGEST_RESULTS = os.path.abspath(r"resources/toy_corpus/ingest_results.json")
TOY_CORPUS_METRICS = {
    name: os.path.abspath(f"resources/toy_corpus/metrics_{name}.csv") for name in ("gc", "ga", "gi")
}
TOY_CORPUS_COMMUNITY_TABLE = os.path.abspath(r"resources/toy_corpus/community_table.csv")

HEP_TH_EDGES = os.path.abspath(r"resources/hep_th/edges.txt")
HEP_TH_DATES = os.path.abspath(r"resources/hep_th/dates.txt")
HEP_TH_ABSTRACTS = os.path.abspath(r"resources/hep_th/abstracts")

# public hep-th files (Cit-HepTh.txt, Cit-HepTh-dates.txt, abstracts folder), optional
HEP_TH_DIR = os.environ.get('HEP_TH_DIR')

# Community table columns: (v, e) -> printed cyclomatic, alpha, beta, gamma (printed decimals)
COMMUNITY_TABLE_COLUMNS = [
    ('October 00', 51, 75, 25, (0.02, 2), (1.47, 2), (51.02, 2)),
    ('April 01', 65, 99, 35, (0.017, 3), (1.52, 2), (52.38, 2)),
    ('October 01', 66, 100, 35, (0.016, 3), (1.51, 2), (52.08, 2)),
    ('April 02', 67, 106, 40, (0.018, 3), (1.58, 2), (54.3, 1)),
    ('October 02', 70, 110, 41, (0.017, 3), (1.57, 2), (53.92, 2)),
    ('April 03', 72, 114, 43, (0.017, 3), (1.58, 2), (54.28, 2)),
]

FOOTPRINT_ORACLE_SEEDS = list(range(500))
METRIC_ORACLE_SEEDS = list(range(200))
JOURNEY_ORACLE_SEEDS = list(range(100))
CORPUS_ORACLE_SEEDS = list(range(100))

POWER_LAW_CASES = [  # (frequency base, exponent)
    (10 ** 6, 1.5),
    (10 ** 6, 2),
    (10 ** 6, 3),
    (1000, 2),
]

STRENGTH_THRESHOLDS = [0, 1, 2, 5]

WINDOW_SPECS = [  # spec, unit, size
    ('1y', 'month', 12),
    ('6m', 'month', 6),
    ('30d', 'day', 30),
    ('7', 'day', 7),
]


def random_tvg_spec(seed, max_nodes=10, max_lifetime=50, directed=None):
    """Random relations as (a, b, label, [(start, end), ...]); end may be None for an open interval."""
    rng = random.Random(seed)
    nodes = rng.randint(2, max_nodes)
    lifetime = rng.randint(2, max_lifetime)
    directed = rng.random() < 0.5 if directed is None else directed
    relations = []
    for _ in range(rng.randint(0, nodes * 2)):
        a, b = rng.sample(range(nodes), 2)
        intervals = []
        for _ in range(rng.randint(1, 3)):
            start = rng.randrange(lifetime)
            end = None if rng.random() < 0.2 else rng.randint(start + 1, lifetime)
            intervals.append((start, end))
        relations.append((a, b, rng.choice([None, 'x']), intervals))
    return nodes, lifetime, directed, relations


def random_edges(seed, max_nodes=12):
    rng = random.Random(seed)
    nodes = rng.randint(1, max_nodes)
    p = rng.random()
    edges = [(u, v) for u in range(nodes) for v in range(u + 1, nodes) if rng.random() < p]
    return nodes, edges


def random_corpus_records(seed, papers=20):
    """Random (paper_id, date, authors, references) tuples, with dangling references."""
    rng = random.Random(seed)
    pool = [f'Author {c}' for c in 'ABCDEFGH']
    records = []
    for i in range(papers):
        authors = rng.sample(pool, rng.randint(1, 4))
        candidates = [f'p{j:02d}' for j in range(papers) if j != i] + ['ext1', 'ext2']
        references = rng.sample(candidates, rng.randint(0, 5))
        records.append((f'p{i:02d}', rng.randint(8000, 9000), authors, references))
    return records


os.chdir(prev_path)
