#include "wavelab/csv.hpp"

#include <cstdio>
#include <fstream>

#include "wavelab/errors.hpp"

namespace wavelab {

namespace {

void append_fixed(std::string& out, double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    std::string_view text(buf);
    // "-0.000" and "0.000" are the same value; keep a single spelling.
    if (text.starts_with('-') && text.find_first_not_of("0.", 1) == std::string_view::npos) text.remove_prefix(1);
    out.append(text);
}

} // namespace

std::string format_csv(std::span<const EntropyReport> series, int precision) {
    if (series.empty()) throw ContractError("format_csv: empty series");
    if (precision < 0 || precision > 17) throw ContractError("format_csv: precision must lie in [0, 17]");
    std::string out = csv_header;
    out += '\n';
    for (const auto& r : series) {
        const double fields[] = {r.t,  r.position_entropy, r.momentum_entropy, r.joint_entropy,   r.dx,
                                 r.dp, r.power_product,    r.eur_slack,        r.heisenberg_slack};
        bool first = true;
        for (double f : fields) {
            if (!first) out += ',';
            append_fixed(out, f, precision);
            first = false;
        }
        out += '\n';
    }
    return out;
}

void emit_csv(std::span<const EntropyReport> series, const std::filesystem::path& path, int precision) {
    const std::string text = format_csv(series, precision);
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory for " + path.string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

} // namespace wavelab
