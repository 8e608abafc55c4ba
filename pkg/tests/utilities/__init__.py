from .data_generator import (acceptance_corpus, generate_corpus, exhaustive_width_one,  # noqa: F401
                             sampled_width_one, small_alphabets)
