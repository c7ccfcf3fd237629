#include "stt/coeff_table.hpp"

#include "stt/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace stt {

namespace {

Rat parse_rational(const std::string& s, long long line) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'", line);
        return Rat(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + s + "'", line);
    }
}

long long parse_int(const std::string& s, long long line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + s + "'", line);
    }
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    if (!s.empty() && s.back() == ',') out.push_back("");
    return out;
}

std::string rational_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

void check_weil_bound(const PrimeRecord& r, long long D) {
    Rat bound(4 * r.p);
    if (!r.a.abs_square_leq(1, bound) || (D > 0 && !r.a.abs_square_leq(-1, bound)))
        throw InvariantViolation("Weil bound failed at p = " + std::to_string(r.p));
}

} // namespace

CoefficientTable load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    CoefficientTable table;
    bool have_d = false, have_header = false;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("#D=", 0) == 0) {
                table.D = parse_int(line.substr(3), lineno);
                have_d = true;
            } else if (line.rfind("#N=", 0) == 0) {
                table.level = parse_int(line.substr(3), lineno);
            }
            continue;
        }
        auto fields = split_csv(line);
        if (!have_header) {
            if (line != "p,ax,ay,eps_num,eps_ord")
                throw ParseError("expected header 'p,ax,ay,eps_num,eps_ord'", lineno);
            if (!have_d) throw ParseError("missing '#D=' metadata before header", lineno);
            have_header = true;
            continue;
        }
        if (fields.size() != 5)
            throw ParseError("expected 5 fields, got " + std::to_string(fields.size()), lineno);
        PrimeRecord r;
        r.p = parse_int(fields[0], lineno);
        if (r.p < 2) throw ParseError("bad prime " + fields[0], lineno);
        r.a = QuadFieldElem{table.D, parse_rational(fields[1], lineno),
                            parse_rational(fields[2], lineno)};
        long long num = parse_int(fields[3], lineno);
        long long ord = parse_int(fields[4], lineno);
        if (ord < 1) throw ParseError("eps_ord must be >= 1", lineno);
        r.eps = Cyclotomic::root_of_unity(static_cast<unsigned>(ord),
                                          ((num % ord) + ord) % ord);
        table.records.push_back(std::move(r));
    }
    if (!have_header) throw ParseError("missing header row", lineno);

    long long prev = 0;
    for (const auto& r : table.records) {
        if (r.p <= prev)
            throw InvariantViolation("records not strictly sorted by p near p = " +
                                     std::to_string(r.p));
        prev = r.p;
        if (table.level > 0 && table.level % r.p == 0)
            throw InvariantViolation("bad prime p = " + std::to_string(r.p) +
                                     " divides the level");
        check_weil_bound(r, table.D);
    }
    return table;
}

void write_coefficients(const CoefficientTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << "#D=" << table.D << "\n";
    if (table.level > 0) out << "#N=" << table.level << "\n";
    out << "p,ax,ay,eps_num,eps_ord\n";
    for (const auto& r : table.records) {
        auto ord = r.eps.multiplicative_order();
        if (!ord) throw InvariantViolation("eps at p = " + std::to_string(r.p) +
                                           " is not a root of unity");
        long long num = 0;
        auto lg = root_of_unity_log(r.eps, *ord);
        if (!lg) throw InvariantViolation("eps at p = " + std::to_string(r.p) +
                                          " is not a root of unity");
        num = *lg;
        out << r.p << ',' << rational_str(r.a.x) << ',' << rational_str(r.a.y) << ','
            << num << ',' << *ord << "\n";
    }
}

double normalize(const PrimeRecord& record, int embedding) {
    if (embedding != 1 && embedding != 2) throw Error("normalize: embedding must be 1 or 2");
    double sqp = std::sqrt(static_cast<double>(record.p));
    if (record.a.D < 0) return record.a.x.convert_to<double>() / sqp;
    if (record.a.D == 0) return record.a.x.convert_to<double>() / sqp;
    return record.a.embed(embedding == 1 ? 1 : -1) / sqp;
}

CheckReport ribet_identity_check(const CoefficientTable& table) {
    CheckReport report;
    for (const auto& r : table.records) {
        ++report.checked;
        QuadFieldElem prod = r.a * r.a.complex_conj();
        auto eps_m = root_of_unity_in_quad(r.eps, table.D);
        if (!eps_m) {
            report.failures.push_back({r.p, "eps value does not lie in the coefficient field"});
            continue;
        }
        if (!(r.a * r.a == *eps_m * prod)) {
            report.failures.push_back({r.p, "a_p^2 != eps_p * (a_p * conj(a_p))"});
            continue;
        }
        if (table.D < 0 && !prod.is_rational()) {
            report.failures.push_back({r.p, "a_p * conj(a_p) is not rational"});
            continue;
        }
        if (table.D > 0 && !prod.is_zero() && !prod.totally_positive())
            report.failures.push_back({r.p, "a_p * conj(a_p) is not totally positive"});
    }
    return report;
}

CheckReport tensor_trace_check(const CoefficientTable& a_table,
                               const CoefficientTable& b_table,
                               const CoefficientTable& c_table) {
    CheckReport report;
    size_t n = a_table.records.size();
    if (b_table.records.size() != n || c_table.records.size() != n)
        throw DimensionMismatch("tensor_trace_check: tables differ in length");
    for (size_t i = 0; i < n; ++i) {
        const auto& ra = a_table.records[i];
        const auto& rb = b_table.records[i];
        const auto& rc = c_table.records[i];
        if (ra.p != rb.p || ra.p != rc.p)
            throw DimensionMismatch("tensor_trace_check: prime support mismatch at index " +
                                    std::to_string(i));
        ++report.checked;
        QuadFieldElem prod = ra.a * rb.a;
        QuadFieldElem expected =
            (a_table.D == 0) ? prod : QuadFieldElem::from_rational(prod.field_trace());
        if (!(rc.a == expected))
            report.failures.push_back({ra.p, "c_p != Tr(a_p * b_p), expected " +
                                                 expected.str() + ", got " + rc.a.str()});
    }
    return report;
}

} // namespace stt
