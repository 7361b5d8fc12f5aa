#include "hamcert/certificate.hpp"

#include <sstream>

namespace hamcert {

bool validate(const Graph& g, const Certificate& c) {
    return std::visit([&](const auto& cert) { return validate(g, cert); }, c);
}

std::string format_certificate(const Certificate& c) {
    std::ostringstream os;
    if (const auto* cycle = std::get_if<HamCycle>(&c)) {
        os << "CYCLE";
        for (int v : cycle->order) os << ' ' << v;
    } else if (const auto* e = std::get_if<Embedding>(&c)) {
        os << "OBSTRUCTION " << (e->kind ? to_string(*e->kind) : std::string("pattern")) << " map=";
        for (std::size_t i = 0; i < e->map.size(); ++i) os << (i ? "," : "") << e->map[i];
    } else {
        const auto& t = std::get<ToughnessWitness>(c);
        os << "TOUGHNESS x=";
        bool first = true;
        for (int v : t.x) {
            os << (first ? "" : ",") << v;
            first = false;
        }
        os << " components=" << t.components.size();
    }
    return os.str();
}

}  // namespace hamcert
