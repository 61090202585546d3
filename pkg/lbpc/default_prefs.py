from pathlib import Path
import os

LBPC_HOME = Path(os.environ.get('LBPC_HOME', Path('~').expanduser() / 'lbpc'))
PREFS_FILE = LBPC_HOME / 'preferences.json'

DEFAULT_PREFERENCES = {'output_format': 'table',  # table or json
                       'log_level': 'WARNING',
                       'json_indent': None,  # None keeps the output on one line
                       'weyl_cap': 100_000,  # max Weyl group size before giving up on a Cartan matrix
                       'root_cap': 10_000,}

# Cartan matrices a_ij = <alpha_i^vee, alpha_j> with simple roots numbered as in Bourbaki
DEFAULT_CARTAN_MATRICES = {'A1': [[2]],
                           'A2': [[2, -1],
                                  [-1, 2]],
                           'A3': [[2, -1, 0],
                                  [-1, 2, -1],
                                  [0, -1, 2]],
                           'B2': [[2, -1],
                                  [-2, 2]],
                           'B3': [[2, -1, 0],
                                  [-1, 2, -1],
                                  [0, -2, 2]],
                           'C3': [[2, -1, 0],
                                  [-1, 2, -2],
                                  [0, -1, 2]],
                           'G2': [[2, -3],
                                  [-1, 2]],}

ALL_PREFS = [DEFAULT_PREFERENCES]
ALL_PREF_FILES = [PREFS_FILE]
