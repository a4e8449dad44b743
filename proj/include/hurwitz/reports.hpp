#pragma once

#include <map>
#include <optional>

#include "hurwitz/reduction.hpp"

namespace hurwitz {

inline constexpr const char* kSchemaVersion = "hurwitz-report/1";

struct RunConfig {
    std::string group_kind = "psl2";   // psl2 | dihedral | perm
    int group_param = 0;               // ell (psl2) or n (dihedral order 2n)
    std::string perm_file;             // generators file for kind "perm"
    std::array<std::string, 4> classes;
    std::vector<int> primes;           // empty means "auto"
    std::string format = "pretty";     // json | csv | pretty
    std::string cache_dir;             // empty disables the cache
    int workers = 1;
    int fusion_depth = 8;
};

// Strict JSON round-trip: unknown keys are rejected.
std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);

// Per-(family, prime) summary used in the printed table.  Only primes with
// bad reduction (or failed conditions) appear in pretty/CSV output; the JSON
// report carries every checked prime.
struct PrimeCell {
    int p = 0;
    bool conditions_ok = true;
    bool bad = false;
    int dbad = 0;
    int gdeg = 0;                // good_ordinary
    int good_supersingular = 0;
    SolveStatus status = SolveStatus::unique;
    std::string bad_comp;        // "1x N=6" or "ambiguous: 4x N=3 | 1x N=6"
    std::string note;
};

struct TableRow {
    std::string group_label;
    std::string ni_label;
    std::string ram;
    int deg = 0;
    int genus = 0;
    int num = 1;
    std::vector<int> component_ids;
    std::vector<PrimeCell> primes;   // all checked primes, ascending
};

// Staged pipeline; every stage is computed once and cached on the object.
class Pipeline {
public:
    explicit Pipeline(RunConfig cfg);

    const RunConfig& config() const { return cfg_; }
    const GroupContext& context() const { return ctx_; }
    const ClassVector& class_vector() const { return cv_; }

    const NielsenSet& nielsen();
    const std::vector<Component>& components();
    const std::vector<ComponentReport>& component_reports();
    const FusionResult& fusion();
    // Primes actually used: config list, or admissible primes on "auto".
    const std::vector<int>& primes();
    const ReductionConditions& conditions(int p);
    const std::vector<ReductionReport>& reductions();   // per (component, prime)
    std::vector<TableRow> table();

private:
    RunConfig cfg_;
    GroupContext ctx_;
    ClassVector cv_;
    std::optional<NielsenSet> nielsen_;
    std::optional<std::vector<Component>> components_;
    std::optional<std::vector<ComponentReport>> reports_;
    std::optional<FusionResult> fusion_;
    std::optional<std::vector<int>> primes_;
    std::map<int, ReductionConditions> conditions_;
    std::optional<std::vector<ReductionReport>> reductions_;
};

GroupContext build_group_from_config(const RunConfig& cfg);

// Serialization of a table (one document per format).  Byte-stable across
// runs and worker counts.
std::string emit_report(const std::vector<TableRow>& rows, const std::string& format);

// Parses an emit_report(..., "json") document back into rows.
std::vector<TableRow> parse_report_json(const std::string& text);

// Versioned Nielsen-set cache keyed by the group descriptor and class
// labels.  Loading verifies an embedded checksum and re-checks the
// product-one invariant on a sample; any mismatch is a miss.
std::string nielsen_cache_key(const FiniteGroup& group,
                              const std::array<std::string, 4>& labels);
void cache_nielsen(const std::string& dir, const std::string& key, const NielsenSet& ns);
std::optional<NielsenSet> load_nielsen(const std::string& dir, const std::string& key,
                                       const GroupContext& ctx, const ClassVector& cv);

// Helpers shared with the CLI.
std::string format_bad_comp(const BadStructure& structure);
std::map<int, int> parse_bad_comp(const std::string& text);   // level -> count

// JSON documents for the intermediate CLI subcommands.
std::string emit_group_doc(const GroupContext& ctx);
std::string emit_nielsen_doc(const GroupContext& ctx, const NielsenSet& ns);
std::string emit_components_doc(const GroupContext& ctx, const NielsenSet& ns,
                                const std::vector<Component>& comps,
                                const FusionResult& fusion);
std::string emit_cusps_doc(const GroupContext& ctx, const std::vector<ComponentReport>& reports);
std::string emit_reduce_doc(Pipeline& pipeline);

} // namespace hurwitz
