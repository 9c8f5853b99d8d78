import argparse
from typing import Sequence

COMMANDS = ("ingest", "train", "evaluate", "export-embeddings", "gradcheck")

# Parser instance
_parser = argparse.ArgumentParser(
    prog="edgmat",
    description="Edge-directed multi-head graph attention for NetFlow intrusion detection"
)
_parser.add_argument('--log-file', default=None, help='Also write DEBUG logs to this file')

# Flags shared by every subcommand; omitted flags stay out of the namespace so they never mask config file values
_common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
_common.add_argument('--config', help='Run config file (key = value text, or .json)')
_common.add_argument('--dataset', help='NetFlow CSV file')
_common.add_argument('--schema', help='Dataset schema file (key = value text)')
_common.add_argument('--mode', choices=['transductive', 'inductive'], help='Topology mode')
_common.add_argument('--sample-fraction', type=float, help='Stratified sample fraction in (0, 1]')
_common.add_argument('--train-fraction', type=float, help='Train share of the stratified split in (0, 1)')
_common.add_argument('--node-init', choices=['ones', 'zeros', 'constant'], help='Initial node feature rule')
_common.add_argument('--node-init-value', type=float, help='Value for --node-init constant')
_common.add_argument('--layers', type=int, help='Number of attention conv layers')
_common.add_argument('--heads', type=int, help='Attention heads per layer')
_common.add_argument('--hidden', type=int, help='Per-head hidden width')
_common.add_argument('--dropout', type=float, help='Dropout probability')
_common.add_argument('--lr', type=float, help='Adam learning rate')
_common.add_argument('--epochs', type=int, help='Training epochs')
_common.add_argument('--leaky-slope', type=float, help='LeakyReLU slope of the attention scores')
_common.add_argument('--seed', type=int, help='Run seed')
_common.add_argument('--out', help='Output directory')
_common.add_argument('--checkpoint', help='Checkpoint path (default: <out>/checkpoint)')

_subparsers = _parser.add_subparsers(dest='command', required=True, metavar='{' + ','.join(COMMANDS) + '}')

_ingest = _subparsers.add_parser('ingest', parents=[_common], argument_default=argparse.SUPPRESS, help='Parse, sample, split and summarize a dataset')
_ingest.add_argument('--dump-graph', action='store_true', help='Write the socket graph as text')
_ingest.add_argument('--dump-encoded', action='store_true', help='Write the encoded feature matrix as CSV')

_subparsers.add_parser('train', parents=[_common], argument_default=argparse.SUPPRESS, help='Train a model and write checkpoint, loss trace and run metadata')
_subparsers.add_parser('evaluate', parents=[_common], argument_default=argparse.SUPPRESS, help='Evaluate a checkpoint on the test edges')

_export = _subparsers.add_parser('export-embeddings', parents=[_common], argument_default=argparse.SUPPRESS, help='Export per-edge embeddings as CSV')
_export.add_argument('--projection', choices=['none', 'pca2'], help='Append 2-D PCA coordinates')
_export.add_argument('--embedding-source', choices=['final', 'input'], help='Final edge embeddings or encoded input features')

_gradcheck = _subparsers.add_parser('gradcheck', parents=[_common], argument_default=argparse.SUPPRESS, help='Check loss gradients on random small graphs')
_gradcheck.add_argument('--gradcheck-graphs', type=int, help='Number of random graphs')


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    return _parser.parse_args(argv)


def overrides(cmd_args: argparse.Namespace) -> dict[str, object]:
    """
    Settings given explicitly on the command line (everything except the command, config path and log file).
    """

    return {
        key: value for key, value in vars(cmd_args).items()
        if key not in ('command', 'config', 'log_file')
    }
