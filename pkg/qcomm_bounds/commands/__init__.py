# flake8: noqa
from qcomm_bounds.commands import curves, maximize, nsweep, sweep, verify, witness

COMMANDS = [sweep, nsweep, maximize, verify, witness, curves]
