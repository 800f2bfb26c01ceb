#pragma once

#include <stdexcept>
#include <string>

namespace sigband {

// Every failure mode the library reports. Codes are stable identifiers:
// the CLI prints them verbatim and maps them onto exit statuses.
enum class errc {
    // input / validation
    empty_input,
    non_uniform_sampling,
    out_of_bounds,
    invalid_rate,
    spec_does_not_fit,
    invalid_cutoff,
    invalid_order,
    invalid_window,
    out_of_band,
    series_too_short,
    contains_gaps,
    snippet_out_of_bounds,
    degenerate_event,
    length_mismatch,
    non_positive_data,
    empty_grid,
    mixed_models,
    zero_variance,
    sub_nyquist,
    non_positive_frequency,
    malformed_header,
    malformed_data,
    offset_before_onset,
    empty_file,
    // numerical
    no_convergence,
    rank_deficient,
};

const char* errc_name(errc code);

// Input-class errors exit the CLI with status 2, numerical failures with 3.
bool is_input_error(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

}  // namespace sigband
