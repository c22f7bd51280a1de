import os
import subprocess
from copy import deepcopy
from typing import Any, Dict, Optional

import yaml

from .local_ideal import TRUNCATION_CAP_ENV, resolve_truncation_cap
from .utils import get_hardcoded_default_config


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigParser:
    """Parse and validate zariski_lab configuration files"""

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize the config parser

        Args:
            config_path: Path to a YAML configuration file; None uses the built-in defaults
        """
        self.config_path = config_path
        self.config = self._load_config()
        self._process_variables()
        self._set_default_paths()
        self._apply_environment()
        self._validate_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load the configuration from a YAML file, layered over the defaults"""
        defaults = get_hardcoded_default_config()
        if self.config_path is None:
            return defaults

        if not os.path.exists(self.config_path):
            raise FileNotFoundError(f"Config file not found: {self.config_path}")

        with open(self.config_path, 'r') as f:
            config = yaml.safe_load(f) or {}

        if not isinstance(config, dict):
            raise ValueError(f"Config file {self.config_path} does not hold a mapping")
        return _merge(defaults, config)

    def _process_variables(self):
        """Replace ${PROJECT_ROOT} and ${project.<key>} in string values"""
        variables = {'PROJECT_ROOT': self._find_project_root()}
        for key, value in self.config.get('project', {}).items():
            variables[f'project.{key}'] = value

        def replace_vars(obj):
            if isinstance(obj, str):
                result = obj
                for var_name, var_value in variables.items():
                    result = result.replace(f"${{{var_name}}}", str(var_value))
                return result
            elif isinstance(obj, dict):
                return {k: replace_vars(v) for k, v in obj.items()}
            elif isinstance(obj, list):
                return [replace_vars(i) for i in obj]
            return obj

        self.config = replace_vars(self.config)

    def _find_project_root(self) -> str:
        """Git repository root around the config file, else its parent directory"""
        if self.config_path is None:
            return os.getcwd()
        start_dir = os.path.dirname(os.path.abspath(self.config_path))
        default_root = os.path.abspath(os.path.join(start_dir, ".."))
        try:
            result = subprocess.run(
                ['git', 'rev-parse', '--show-toplevel'],
                cwd=start_dir,
                stdout=subprocess.PIPE,
                stderr=subprocess.PIPE,
                text=True,
                check=False
            )
            if result.returncode == 0:
                return result.stdout.strip()
        except (subprocess.SubprocessError, FileNotFoundError):
            pass
        return default_root

    def _set_default_paths(self):
        """Derive output locations that were left unset"""
        output = self.config.setdefault('output', {})
        if not output.get('base_dir'):
            project_name = self.config.get('project', {}).get('name', 'zariski_lab')
            output['base_dir'] = os.path.join(os.getcwd(), 'data', project_name)
        if not output.get('survey_dir'):
            output['survey_dir'] = os.path.join(output['base_dir'], 'survey')

        survey = self.config.setdefault('survey', {})
        if not survey.get('output_file'):
            survey['output_file'] = os.path.join(
                output['survey_dir'],
                f"survey_rank{survey.get('rank', 3)}_colength{survey.get('max_colength', 20)}.csv"
            )

    def _apply_environment(self):
        """$ZLAB_TRUNCATION_CAP overrides local_ideal.truncation_cap"""
        if os.environ.get(TRUNCATION_CAP_ENV):
            self.config.setdefault('local_ideal', {})['truncation_cap'] = resolve_truncation_cap()

    def _validate_config(self):
        """Validate that the configuration has all required fields"""
        required_fields = ['project', 'local_ideal', 'survey', 'decide', 'output']
        for field in required_fields:
            if field not in self.config:
                raise ValueError(f"Missing required configuration field: {field}")

        positive_fields = [
            ('local_ideal', 'truncation_cap'),
            ('survey', 'max_colength'),
            ('survey', 'workers'),
            ('decide', 'workers'),
        ]
        for section, key in positive_fields:
            value = self.config[section].get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"Configuration field {section}.{key} must be a positive integer, got {value!r}")

        rank = self.config['survey'].get('rank')
        if not isinstance(rank, int) or rank < 2:
            raise ValueError(f"Configuration field survey.rank must be an integer >= 2, got {rank!r}")

    def get_config(self) -> Dict[str, Any]:
        """Get the parsed configuration"""
        return self.config

    @property
    def truncation_cap(self) -> int:
        return self.config['local_ideal']['truncation_cap']
