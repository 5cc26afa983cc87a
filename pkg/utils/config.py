# utils/config.py
import os
from dotenv import load_dotenv

load_dotenv()

CLOSURE_CAP = int(os.getenv("EXACTROT_CLOSURE_CAP", 10000))
ORDER_CAP = int(os.getenv("EXACTROT_ORDER_CAP", 1000))
SUBGROUP_GUARD = int(os.getenv("EXACTROT_SUBGROUP_GUARD", 200))
WORD_DEPTH_GUARD = int(os.getenv("EXACTROT_WORD_DEPTH_GUARD", 12))

DEFAULT_SEED = int(os.getenv("EXACTROT_SEED", 20240607))
FUZZ_PAIRS = int(os.getenv("EXACTROT_FUZZ_PAIRS", 1000))

LOG_LEVEL = os.getenv("EXACTROT_LOG_LEVEL", "WARNING").upper()
