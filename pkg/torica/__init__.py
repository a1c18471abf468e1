from .fitxer import FanFile, emit_fan_file, parse_fan_file
from .ordres import run_command
