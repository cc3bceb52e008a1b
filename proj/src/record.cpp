#include "minkball/record.hpp"

#include <cstdio>
#include <sstream>

namespace minkball {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string to_json(const CriticalData& d) {
    std::ostringstream os;
    os << "{\"p\":" << format_double(d.p)
       << ",\"sigma\":" << format_double(d.sigma)
       << ",\"tau\":" << format_double(d.tau)
       << ",\"delta0\":" << format_double(d.delta0)
       << ",\"delta1\":" << format_double(d.delta1)
       << ",\"branch\":\"" << to_string(d.branch)
       << "\",\"delta\":" << format_double(d.delta)
       << ",\"volume\":" << format_double(d.volume)
       << ",\"density\":" << format_double(d.density)
       << ",\"class\":\"" << to_string(d.ball_class) << "\"}";
    return os.str();
}

std::string csv_header() {
    return "p,sigma,tau,delta0,delta1,branch,delta,volume,density,class";
}

std::string to_csv_row(const CriticalData& d) {
    std::ostringstream os;
    os << format_double(d.p) << ',' << format_double(d.sigma) << ','
       << format_double(d.tau) << ',' << format_double(d.delta0) << ','
       << format_double(d.delta1) << ',' << to_string(d.branch) << ','
       << format_double(d.delta) << ',' << format_double(d.volume) << ','
       << format_double(d.density) << ',' << to_string(d.ball_class);
    return os.str();
}

}  // namespace minkball
