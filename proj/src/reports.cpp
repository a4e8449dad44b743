#include "hurwitz/reports.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

using json = nlohmann::ordered_json;

namespace {

uint64_t fnv64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::string solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::unique: return "unique";
        case SolveStatus::ambiguous: return "ambiguous";
        default: return "infeasible";
    }
}

SolveStatus solve_status_from(const std::string& s) {
    if (s == "unique") return SolveStatus::unique;
    if (s == "ambiguous") return SolveStatus::ambiguous;
    if (s == "infeasible") return SolveStatus::infeasible;
    throw precondition_error("unknown solve status: " + s);
}

json perm_to_json(const Permutation& p) {
    json arr = json::array();
    for (uint16_t v : p.images) arr.push_back(v);
    return arr;
}

Permutation perm_from_json(const json& arr) {
    std::vector<uint16_t> images;
    for (const auto& v : arr) images.push_back(v.get<uint16_t>());
    Permutation p(std::move(images));
    validate_permutation(p);
    return p;
}

std::string tuples_payload(const NielsenSet& ns) {
    std::ostringstream os;
    for (const auto& t : ns.tuples)
        for (const auto& g : t.g) os << format_permutation(g) << '|';
    return os.str();
}

} // namespace

std::string config_to_json(const RunConfig& cfg) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["group_kind"] = cfg.group_kind;
    doc["group_param"] = cfg.group_param;
    doc["perm_file"] = cfg.perm_file;
    doc["classes"] = cfg.classes;
    doc["primes"] = cfg.primes;
    doc["format"] = cfg.format;
    doc["cache_dir"] = cfg.cache_dir;
    doc["workers"] = cfg.workers;
    doc["fusion_depth"] = cfg.fusion_depth;
    return doc.dump(2);
}

RunConfig config_from_json(const std::string& text) {
    json doc = json::parse(text);
    static const std::vector<std::string> known = {
        "schema_version", "group_kind", "group_param", "perm_file", "classes",
        "primes",         "format",     "cache_dir",   "workers",   "fusion_depth"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        check_pre(std::find(known.begin(), known.end(), it.key()) != known.end(),
                  "unknown config key: " + it.key());
    RunConfig cfg;
    if (doc.contains("schema_version"))
        check_pre(doc["schema_version"] == kSchemaVersion, "unsupported schema version");
    if (doc.contains("group_kind")) cfg.group_kind = doc["group_kind"].get<std::string>();
    if (doc.contains("group_param")) cfg.group_param = doc["group_param"].get<int>();
    if (doc.contains("perm_file")) cfg.perm_file = doc["perm_file"].get<std::string>();
    if (doc.contains("classes")) {
        auto v = doc["classes"].get<std::vector<std::string>>();
        check_pre(v.size() == 4, "classes must have four labels");
        std::copy(v.begin(), v.end(), cfg.classes.begin());
    }
    if (doc.contains("primes")) cfg.primes = doc["primes"].get<std::vector<int>>();
    if (doc.contains("format")) cfg.format = doc["format"].get<std::string>();
    if (doc.contains("cache_dir")) cfg.cache_dir = doc["cache_dir"].get<std::string>();
    if (doc.contains("workers")) cfg.workers = doc["workers"].get<int>();
    if (doc.contains("fusion_depth")) cfg.fusion_depth = doc["fusion_depth"].get<int>();
    return cfg;
}

GroupContext build_group_from_config(const RunConfig& cfg) {
    if (cfg.group_kind == "psl2") return make_context(build_psl2(cfg.group_param));
    if (cfg.group_kind == "dihedral") return make_context(build_dihedral(cfg.group_param));
    if (cfg.group_kind == "perm") {
        std::ifstream in(cfg.perm_file);
        check_pre(in.good(), "cannot open generator file: " + cfg.perm_file);
        std::vector<Permutation> gens;
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (blank) continue;
            gens.push_back(parse_permutation(line));
        }
        check_pre(!gens.empty(), "generator file is empty");
        int degree = gens.front().degree();
        for (const auto& g : gens) check_pre(g.degree() == degree, "generator degree mismatch");
        std::string stem = std::filesystem::path(cfg.perm_file).stem().string();
        return make_context(build_from_generators(degree, std::move(gens), "perm:" + stem));
    }
    throw precondition_error("unknown group kind: " + cfg.group_kind);
}

Pipeline::Pipeline(RunConfig cfg) : cfg_(std::move(cfg)), ctx_(build_group_from_config(cfg_)) {
    cv_ = resolve_class_vector(ctx_, cfg_.classes);
}

const NielsenSet& Pipeline::nielsen() {
    if (nielsen_) return *nielsen_;
    std::string key;
    if (!cfg_.cache_dir.empty()) {
        key = nielsen_cache_key(ctx_.group, cfg_.classes);
        if (auto cached = load_nielsen(cfg_.cache_dir, key, ctx_, cv_)) {
            nielsen_ = std::move(*cached);
            return *nielsen_;
        }
    }
    EnumerateOptions options;
    options.workers = cfg_.workers;
    nielsen_ = enumerate_nielsen(ctx_, cv_, options);
    if (!cfg_.cache_dir.empty()) cache_nielsen(cfg_.cache_dir, key, *nielsen_);
    return *nielsen_;
}

const std::vector<Component>& Pipeline::components() {
    if (!components_) components_ = decompose_components(ctx_, nielsen());
    return *components_;
}

const std::vector<ComponentReport>& Pipeline::component_reports() {
    if (!reports_) {
        std::vector<ComponentReport> reports;
        for (const auto& comp : components()) reports.push_back(component_report(ctx_, comp));
        reports_ = std::move(reports);
    }
    return *reports_;
}

const FusionResult& Pipeline::fusion() {
    if (!fusion_) fusion_ = fuse_isomorphic_components(ctx_, nielsen(), components(), cfg_.fusion_depth);
    return *fusion_;
}

const std::vector<int>& Pipeline::primes() {
    if (!primes_) {
        std::vector<int> ps = cfg_.primes.empty() ? admissible_primes(ctx_, cv_) : cfg_.primes;
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        primes_ = std::move(ps);
    }
    return *primes_;
}

const ReductionConditions& Pipeline::conditions(int p) {
    auto it = conditions_.find(p);
    if (it == conditions_.end()) it = conditions_.emplace(p, check_conditions(ctx_, cv_, p)).first;
    return it->second;
}

const std::vector<ReductionReport>& Pipeline::reductions() {
    if (reductions_) return *reductions_;
    const auto& reports = component_reports();
    const auto& ps = primes();
    for (int p : ps) conditions(p);   // materialize before going parallel

    const size_t jobs = reports.size() * ps.size();
    std::vector<ReductionReport> out(jobs);
    auto run_range = [&](size_t begin, size_t end) {
        for (size_t j = begin; j < end; ++j) {
            size_t c = j / ps.size();
            int p = ps[j % ps.size()];
            out[j] = reduce_component(ctx_, static_cast<int>(c), reports[c], conditions(p));
        }
    };
    size_t chunks = std::min<size_t>(static_cast<size_t>(std::max(1, cfg_.workers)), jobs);
    if (chunks <= 1) {
        run_range(0, jobs);
    } else {
        std::vector<std::future<void>> futures;
        for (size_t k = 0; k < chunks; ++k)
            futures.push_back(std::async(std::launch::async, run_range, jobs * k / chunks,
                                         jobs * (k + 1) / chunks));
        for (auto& f : futures) f.get();
    }
    reductions_ = std::move(out);
    return *reductions_;
}

namespace {

std::string ni_label_of(const ClassVector& cv) {
    // Compress to the letter pattern ("AABB") when all four orders agree.
    bool same_order = cv.orders[0] == cv.orders[1] && cv.orders[1] == cv.orders[2] &&
                      cv.orders[2] == cv.orders[3];
    if (same_order) {
        std::string prefix = std::to_string(cv.orders[0]);
        std::string out;
        for (const auto& label : cv.labels) {
            if (label.rfind(prefix, 0) != 0) { out.clear(); break; }
            out += label.substr(prefix.size());
        }
        if (!out.empty()) return out;
    }
    std::string out = cv.labels[0];
    for (int i = 1; i < 4; ++i) out += "," + cv.labels[static_cast<size_t>(i)];
    return out;
}

} // namespace

std::string format_bad_comp(const BadStructure& structure) {
    if (structure.solutions.empty()) return "infeasible";
    auto format_solution = [&](const BadStructureSolution& sol) {
        std::ostringstream os;
        bool first = true;
        // Descending level order, matching the printed tables.
        for (size_t i = structure.levels.size(); i-- > 0;) {
            if (sol.counts[i] == 0) continue;
            if (!first) os << ", ";
            os << sol.counts[i] << "x N=" << structure.levels[i];
            first = false;
        }
        return os.str();
    };
    if (structure.solutions.size() == 1) return format_solution(structure.solutions.front());
    std::ostringstream os;
    os << "ambiguous: ";
    for (size_t i = 0; i < structure.solutions.size(); ++i) {
        if (i) os << " | ";
        os << format_solution(structure.solutions[i]);
    }
    return os.str();
}

std::map<int, int> parse_bad_comp(const std::string& text) {
    std::map<int, int> out;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        size_t x = part.find('x');
        size_t n = part.find("N=");
        check_pre(x != std::string::npos && n != std::string::npos && n > x,
                  "bad component token: " + part);
        int count = std::stoi(part.substr(0, x));
        int level = std::stoi(part.substr(n + 2));
        out[level] += count;
    }
    return out;
}

std::vector<TableRow> Pipeline::table() {
    const auto& reports = component_reports();
    const auto& fus = fusion();
    const auto& reds = reductions();
    const auto& ps = primes();

    auto reduction_of = [&](int comp, int p) -> const ReductionReport& {
        size_t np = ps.size();
        size_t pi = static_cast<size_t>(std::find(ps.begin(), ps.end(), p) - ps.begin());
        return reds[static_cast<size_t>(comp) * np + pi];
    };

    std::vector<TableRow> rows;
    for (const auto& family : fus.families) {
        int rep = family.front();
        const auto& rep_report = reports[static_cast<size_t>(rep)];
        TableRow row;
        row.group_label = ctx_.group.label;
        row.ni_label = ni_label_of(cv_);
        row.ram = rep_report.ram_string;
        row.deg = rep_report.degree;
        row.genus = rep_report.genus;
        row.num = static_cast<int>(family.size());
        row.component_ids = family;
        for (int member : family) {
            check_internal(reports[static_cast<size_t>(member)].degree == row.deg &&
                               reports[static_cast<size_t>(member)].genus == row.genus,
                           "fused components disagree on degree or genus");
        }
        for (int p : ps) {
            const auto& red = reduction_of(rep, p);
            PrimeCell cell;
            cell.p = p;
            cell.conditions_ok = red.conditions_ok;
            cell.bad = red.bad;
            cell.dbad = red.dbad;
            cell.gdeg = red.good_ordinary;
            cell.good_supersingular = red.good_supersingular;
            if (red.bad && red.conditions_ok) {
                cell.status = red.structure.status;
                cell.bad_comp = format_bad_comp(red.structure);
            } else if (red.bad) {
                cell.status = SolveStatus::infeasible;
                cell.bad_comp = "";
                cell.note = "conditions not satisfied";
            }
            if (!red.conditions_ok && !red.bad) cell.note = "conditions not satisfied";
            for (int member : family) {
                const auto& other = reduction_of(member, p);
                check_internal(other.dbad == red.dbad && other.good_ordinary == red.good_ordinary,
                               "fused components disagree on reduction data");
            }
            row.primes.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.genus != b.genus) return a.genus < b.genus;
        if (a.ram != b.ram) return a.ram < b.ram;
        return a.component_ids < b.component_ids;
    });
    return rows;
}

namespace {

json row_to_json(const TableRow& row) {
    json r;
    r["group"] = row.group_label;
    r["ni"] = row.ni_label;
    r["ram"] = row.ram;
    r["deg"] = row.deg;
    r["genus"] = row.genus;
    r["num"] = row.num;
    r["components"] = row.component_ids;
    json primes = json::array();
    for (const auto& cell : row.primes) {
        json c;
        c["p"] = cell.p;
        c["conditions_ok"] = cell.conditions_ok;
        c["bad"] = cell.bad;
        c["d_bad"] = cell.dbad;
        c["gdeg"] = cell.gdeg;
        c["good_supersingular"] = cell.good_supersingular;
        c["status"] = solve_status_name(cell.status);
        c["bad_comp"] = cell.bad_comp;
        c["note"] = cell.note;
        primes.push_back(std::move(c));
    }
    r["primes"] = std::move(primes);
    return r;
}

TableRow row_from_json(const json& r) {
    TableRow row;
    row.group_label = r.at("group").get<std::string>();
    row.ni_label = r.at("ni").get<std::string>();
    row.ram = r.at("ram").get<std::string>();
    row.deg = r.at("deg").get<int>();
    row.genus = r.at("genus").get<int>();
    row.num = r.at("num").get<int>();
    row.component_ids = r.at("components").get<std::vector<int>>();
    for (const auto& c : r.at("primes")) {
        PrimeCell cell;
        cell.p = c.at("p").get<int>();
        cell.conditions_ok = c.at("conditions_ok").get<bool>();
        cell.bad = c.at("bad").get<bool>();
        cell.dbad = c.at("d_bad").get<int>();
        cell.gdeg = c.at("gdeg").get<int>();
        cell.good_supersingular = c.at("good_supersingular").get<int>();
        cell.status = solve_status_from(c.at("status").get<std::string>());
        cell.bad_comp = c.at("bad_comp").get<std::string>();
        cell.note = c.at("note").get<std::string>();
        row.primes.push_back(std::move(cell));
    }
    return row;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string emit_pretty(const std::vector<TableRow>& rows) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"group", "Ni", "ramification", "deg", "g", "num", "p", "bad components", "gdeg"});
    for (const auto& row : rows) {
        std::vector<const PrimeCell*> shown;
        for (const auto& cell : row.primes)
            if (cell.bad || !cell.conditions_ok) shown.push_back(&cell);
        if (shown.empty()) {
            grid.push_back({row.group_label, row.ni_label, row.ram, std::to_string(row.deg),
                            std::to_string(row.genus), std::to_string(row.num), "-", "-", "-"});
            continue;
        }
        bool first = true;
        for (const PrimeCell* cell : shown) {
            std::string bad = cell->bad ? cell->bad_comp : "";
            if (!cell->note.empty()) bad = bad.empty() ? cell->note : bad + " (" + cell->note + ")";
            std::vector<std::string> line;
            if (first) {
                line = {row.group_label, row.ni_label, row.ram, std::to_string(row.deg),
                        std::to_string(row.genus), std::to_string(row.num)};
            } else {
                line = {"", "", "", "", "", ""};
            }
            line.push_back(std::to_string(cell->p));
            line.push_back(bad);
            line.push_back(cell->bad && cell->conditions_ok ? std::to_string(cell->gdeg) : "-");
            grid.push_back(std::move(line));
            first = false;
        }
    }
    std::vector<size_t> widths(grid.front().size(), 0);
    for (const auto& line : grid)
        for (size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
    std::ostringstream os;
    for (const auto& line : grid) {
        for (size_t i = 0; i < line.size(); ++i) {
            os << line[i];
            if (i + 1 < line.size()) os << std::string(widths[i] - line[i].size() + 2, ' ');
        }
        os << '\n';
    }
    return os.str();
}

std::string emit_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "group,ni,ram,deg,genus,num,p,bad_components,gdeg\n";
    for (const auto& row : rows) {
        std::vector<const PrimeCell*> shown;
        for (const auto& cell : row.primes)
            if (cell.bad || !cell.conditions_ok) shown.push_back(&cell);
        auto prefix = [&] {
            std::ostringstream line;
            line << csv_quote(row.group_label) << ',' << csv_quote(row.ni_label) << ','
                 << csv_quote(row.ram) << ',' << row.deg << ',' << row.genus << ',' << row.num;
            return line.str();
        }();
        if (shown.empty()) {
            os << prefix << ",-,-,-\n";
            continue;
        }
        for (const PrimeCell* cell : shown) {
            std::string bad = cell->bad ? cell->bad_comp : cell->note;
            os << prefix << ',' << cell->p << ',' << csv_quote(bad) << ','
               << (cell->bad && cell->conditions_ok ? std::to_string(cell->gdeg) : "-") << '\n';
        }
    }
    return os.str();
}

} // namespace

std::string emit_report(const std::vector<TableRow>& rows, const std::string& format) {
    if (format == "json") {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        // the num column comes from a braid-word search, not from a proof
        doc["fusion_heuristic"] = true;
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(row_to_json(row));
        doc["rows"] = std::move(arr);
        return doc.dump(2) + "\n";
    }
    if (format == "csv") return emit_csv(rows);
    if (format == "pretty") return emit_pretty(rows);
    throw precondition_error("unknown output format: " + format);
}

std::vector<TableRow> parse_report_json(const std::string& text) {
    json doc = json::parse(text);
    check_pre(doc.at("schema_version") == kSchemaVersion, "unsupported schema version");
    std::vector<TableRow> rows;
    for (const auto& r : doc.at("rows")) rows.push_back(row_from_json(r));
    return rows;
}

std::string nielsen_cache_key(const FiniteGroup& group,
                              const std::array<std::string, 4>& labels) {
    std::ostringstream os;
    os << kSchemaVersion << '|' << group.label << '|' << group.degree << '|';
    for (const auto& g : group.generators) os << format_permutation(g) << '|';
    for (const auto& l : labels) os << l << '|';
    return hex64(fnv64(os.str()));
}

void cache_nielsen(const std::string& dir, const std::string& key, const NielsenSet& ns) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["key"] = key;
    doc["class_labels"] = ns.class_vector.labels;
    doc["d"] = ns.d();
    doc["checksum"] = hex64(fnv64(tuples_payload(ns)));
    json tuples = json::array();
    for (const auto& t : ns.tuples) {
        json tj = json::array();
        for (const auto& g : t.g) tj.push_back(perm_to_json(g));
        tuples.push_back(std::move(tj));
    }
    doc["tuples"] = std::move(tuples);

    fs::path final_path = fs::path(dir) / ("nielsen_" + key + ".json");
    fs::path tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream out(tmp_path);
        out << doc.dump();
    }
    fs::rename(tmp_path, final_path, ec);
    if (ec) std::cerr << "warning: cache write failed: " << ec.message() << '\n';
}

std::optional<NielsenSet> load_nielsen(const std::string& dir, const std::string& key,
                                       const GroupContext& ctx, const ClassVector& cv) {
    namespace fs = std::filesystem;
    fs::path path = fs::path(dir) / ("nielsen_" + key + ".json");
    std::ifstream in(path);
    if (!in.good()) return std::nullopt;
    try {
        json doc = json::parse(in);
        if (doc.at("schema_version") != kSchemaVersion || doc.at("key") != key)
            return std::nullopt;
        NielsenSet ns;
        ns.class_vector = cv;
        for (const auto& tj : doc.at("tuples")) {
            NielsenTuple t;
            for (int i = 0; i < 4; ++i) t.g[static_cast<size_t>(i)] = perm_from_json(tj.at(static_cast<size_t>(i)));
            ns.tuples.push_back(std::move(t));
        }
        if (doc.at("d").get<size_t>() != ns.d()) throw precondition_error("tuple count mismatch");
        if (doc.at("checksum").get<std::string>() != hex64(fnv64(tuples_payload(ns))))
            throw precondition_error("checksum mismatch");
        // Spot-check the invariants before trusting cached data.
        size_t step = std::max<size_t>(1, ns.d() / 5);
        for (size_t i = 0; i < ns.d(); i += step) {
            const auto& t = ns.tuples[i];
            if (!tuple_product(t).is_identity()) throw precondition_error("product-one violated");
            for (int j = 0; j < 4; ++j)
                if (ctx.classes.class_of(ctx.group, t.g[static_cast<size_t>(j)]) !=
                    cv.class_index[static_cast<size_t>(j)])
                    throw precondition_error("class membership violated");
        }
        return ns;
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring cache file " << path.string() << ": " << e.what() << '\n';
        return std::nullopt;
    }
}

std::string emit_group_doc(const GroupContext& ctx) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["label"] = ctx.group.label;
    doc["degree"] = ctx.group.degree;
    doc["order"] = ctx.group.order();
    json classes = json::array();
    for (const auto& cls : ctx.classes.classes) {
        json c;
        c["label"] = cls.label;
        c["element_order"] = cls.element_order;
        c["size"] = cls.size();
        c["rep"] = perm_to_json(cls.rep);
        classes.push_back(std::move(c));
    }
    doc["classes"] = std::move(classes);
    return doc.dump(2) + "\n";
}

std::string emit_nielsen_doc(const GroupContext& ctx, const NielsenSet& ns) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["group"] = ctx.group.label;
    doc["classes"] = ns.class_vector.labels;
    doc["d"] = ns.d();
    json tuples = json::array();
    for (const auto& t : ns.tuples) {
        json tj = json::array();
        for (const auto& g : t.g) tj.push_back(perm_to_json(g));
        tuples.push_back(std::move(tj));
    }
    doc["tuples"] = std::move(tuples);
    return doc.dump(2) + "\n";
}

std::string emit_components_doc(const GroupContext& ctx, const NielsenSet& ns,
                                const std::vector<Component>& comps,
                                const FusionResult& fusion) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["group"] = ctx.group.label;
    doc["classes"] = ns.class_vector.labels;
    doc["d"] = ns.d();
    json arr = json::array();
    std::map<NielsenTuple, size_t> tuple_index;
    for (size_t i = 0; i < ns.tuples.size(); ++i) tuple_index.emplace(ns.tuples[i], i);
    for (size_t c = 0; c < comps.size(); ++c) {
        json cj;
        cj["id"] = c;
        cj["degree"] = comps[c].degree();
        json members = json::array();
        for (const auto& t : comps[c].members) members.push_back(tuple_index.at(t));
        cj["members"] = std::move(members);
        arr.push_back(std::move(cj));
    }
    doc["components"] = std::move(arr);
    doc["families"] = fusion.families;
    doc["fusion_depth"] = fusion.depth_limit;
    doc["fusion_heuristic"] = true;
    return doc.dump(2) + "\n";
}

std::string emit_cusps_doc(const GroupContext& ctx, const std::vector<ComponentReport>& reports) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["group"] = ctx.group.label;
    json arr = json::array();
    for (size_t c = 0; c < reports.size(); ++c) {
        const auto& rep = reports[c];
        json cj;
        cj["id"] = c;
        cj["degree"] = rep.degree;
        cj["genus"] = rep.genus;
        cj["ram"] = rep.ram_string;
        json cusps;
        for (BranchPoint w : {BranchPoint::zero, BranchPoint::one, BranchPoint::infinity}) {
            json list = json::array();
            for (const auto& cusp : rep.cusps[static_cast<size_t>(w)]) {
                json k;
                k["e"] = cusp.e;
                k["n"] = cusp.n;
                k["gamma_class"] = ctx.classes.classes[cusp.gamma_class].label;
                k["e_equals_n"] = cusp.e_equals_n();
                list.push_back(std::move(k));
            }
            cusps[branch_point_name(w)] = std::move(list);
        }
        cj["cusps"] = std::move(cusps);
        arr.push_back(std::move(cj));
    }
    doc["components"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string emit_reduce_doc(Pipeline& pipeline) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["group"] = pipeline.context().group.label;
    json conds_arr = json::array();
    for (int p : pipeline.primes()) {
        const auto& conds = pipeline.conditions(p);
        json c;
        c["p"] = p;
        c["p_odd"] = conds.p_odd;
        c["orders_prime_to_p"] = conds.orders_prime_to_p;
        c["p_exactly_divides"] = conds.p_exactly_divides;
        c["normalizer_dihedral"] = conds.normalizer_dihedral;
        c["center_trivial"] = conds.center_trivial;
        c["generation_f"] = conds.generation_f;
        c["generation_f_pairs"] = conds.generation_f_pairs;
        c["half_order"] = conds.half_order;
        c["all_hold"] = conds.all_hold();
        conds_arr.push_back(std::move(c));
    }
    doc["conditions"] = std::move(conds_arr);
    json arr = json::array();
    for (const auto& red : pipeline.reductions()) {
        json r;
        r["component"] = red.component_id;
        r["p"] = red.p;
        r["conditions_ok"] = red.conditions_ok;
        r["verdict"] = !red.conditions_ok ? "not-applicable" : (red.bad ? "bad" : "good");
        json dbadw;
        for (BranchPoint w : {BranchPoint::zero, BranchPoint::one, BranchPoint::infinity})
            dbadw[branch_point_name(w)] = red.d_bad_w[static_cast<size_t>(w)];
        r["d_bad_per_w"] = std::move(dbadw);
        json orders;
        for (BranchPoint w : {BranchPoint::zero, BranchPoint::one, BranchPoint::infinity})
            orders[branch_point_name(w)] = red.bad_orders_w[static_cast<size_t>(w)];
        r["bad_cusp_orders"] = std::move(orders);
        if (red.conditions_ok) {
            r["d_bad"] = red.dbad;
            r["good_ordinary"] = red.good_ordinary;
            r["good_supersingular"] = red.good_supersingular;
        }
        if (red.bad && red.conditions_ok) {
            r["levels"] = red.structure.levels;
            r["multiplicities"] = red.structure.multiplicities;
            r["x2_degrees"] = red.structure.x2_degrees;
            r["status"] = solve_status_name(red.structure.status);
            json sols = json::array();
            for (const auto& sol : red.structure.solutions) sols.push_back(sol.counts);
            r["solutions"] = std::move(sols);
            r["bad_comp"] = format_bad_comp(red.structure);
            r["moduli_bound"] = red.moduli_bound;
        }
        arr.push_back(std::move(r));
    }
    doc["reductions"] = std::move(arr);
    return doc.dump(2) + "\n";
}

} // namespace hurwitz
