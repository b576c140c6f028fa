import os

root_path = os.path.dirname(__file__)


def p(name, ext):
    return os.path.join(root_path, ext, f"{name}.{ext}")


class Resources:
    class Json:
        bad_json = p("bad_json", "json")
        missing_version = p("missing_version", "json")
        future_version = p("future_version", "json")
        unknown_kind = p("unknown_kind", "json")
        missing_field = p("missing_field", "json")
        non_trace_preserving = p("non_trace_preserving", "json")
        reject_all_dfa = p("reject_all_dfa", "json")
        long_words_dfa = p("long_words_dfa", "json")
        big_alphabet_dfa = p("big_alphabet_dfa", "json")
