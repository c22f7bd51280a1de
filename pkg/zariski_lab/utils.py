import os
import sys
from typing import Any, Dict, Optional, TextIO

import yaml
from colorama import Fore, Style

_STATUS_STYLES = {
    'ok': (Fore.GREEN, "✓"),
    'warn': (Fore.YELLOW, "⚠️"),
    'fail': (Fore.RED, "❌"),
    'info': (Fore.CYAN, "•"),
}


def print_status(message: str, kind: str = 'ok', stream: Optional[TextIO] = None):
    """Print a coloured status line (✓ / ⚠️ / ❌); stderr unless a stream is given"""
    color, marker = _STATUS_STYLES.get(kind, _STATUS_STYLES['info'])
    print(f"{color}{marker} {message}{Style.RESET_ALL}", file=stream or sys.stderr)


def create_default_config(output_path: str, template_config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Create a default configuration

    Args:
        output_path: Path where to save the default config
        template_config_path: Optional path to an existing config file to use as template

    Returns:
        Default configuration dictionary
    """
    config = get_hardcoded_default_config()
    if template_config_path and os.path.exists(template_config_path):
        try:
            with open(template_config_path, 'r') as f:
                template = yaml.safe_load(f) or {}
            # template sections override the defaults key by key
            for section, values in template.items():
                if isinstance(values, dict) and isinstance(config.get(section), dict):
                    config[section].update(values)
                else:
                    config[section] = values
            print_status(f"Using configuration template from: {template_config_path}", 'info')
        except Exception as e:
            print_status(f"Error reading template configuration: {e}", 'warn')
            print_status("Falling back to default configuration.", 'warn')
            config = get_hardcoded_default_config()

    os.makedirs(os.path.dirname(os.path.abspath(output_path)), exist_ok=True)

    with open(output_path, 'w') as f:
        f.write("# zariski_lab configuration; $ZLAB_TRUNCATION_CAP overrides local_ideal.truncation_cap\n")
        yaml.dump(config, f, default_flow_style=False)

    return config


def get_hardcoded_default_config() -> Dict[str, Any]:
    """
    Returns a hardcoded default configuration dictionary

    Returns:
        Default configuration dictionary
    """
    return {
        'project': {
            'name': 'zariski_lab',
            'description': 'Ideals of minors of integrally closed modules',
        },
        'local_ideal': {
            'truncation_cap': 64,  # largest m-power tried before giving up on m-primarity
        },
        'survey': {
            'max_colength': 20,
            'rank': 3,
            'workers': 4,
            'output_file': '',  # defaults to <survey_dir>/survey_rank<r>_colength<N>.csv
        },
        'decide': {
            'workers': 1,
        },
        'output': {
            'base_dir': '',  # defaults to ./data/<project name>
            'survey_dir': '',
        },
    }
