#ifndef TSYS_ERROR_HPP
#define TSYS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tsys {

enum class Errc {
    NotDivisible,
    ResidualTail,
    MissingScheme,
    NegativeCoefficient,
    NotTFree,
    NotMutable,
    PointBelowSurface,
    ScopeViolation,
    InvalidNeighborHeights,
    DegenerateShadow,
    InconsistentRow,
    UnbalancedColumn,
    NotPerfect,
    NotAPathFamily,
    UnrecognizedLocalPattern,
    InvalidKappa,
    SiteNotLocated,
    BadInput,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::ResidualTail: return "ResidualTail";
        case Errc::MissingScheme: return "MissingScheme";
        case Errc::NegativeCoefficient: return "NegativeCoefficient";
        case Errc::NotTFree: return "NotTFree";
        case Errc::NotMutable: return "NotMutable";
        case Errc::PointBelowSurface: return "PointBelowSurface";
        case Errc::ScopeViolation: return "ScopeViolation";
        case Errc::InvalidNeighborHeights: return "InvalidNeighborHeights";
        case Errc::DegenerateShadow: return "DegenerateShadow";
        case Errc::InconsistentRow: return "InconsistentRow";
        case Errc::UnbalancedColumn: return "UnbalancedColumn";
        case Errc::NotPerfect: return "NotPerfect";
        case Errc::NotAPathFamily: return "NotAPathFamily";
        case Errc::UnrecognizedLocalPattern: return "UnrecognizedLocalPattern";
        case Errc::InvalidKappa: return "InvalidKappa";
        case Errc::SiteNotLocated: return "SiteNotLocated";
        case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

    // User/scope errors exit the CLI with status 2, internal invariant
    // failures with status 3.
    bool is_user_error() const {
        switch (code_) {
            case Errc::ScopeViolation:
            case Errc::PointBelowSurface:
            case Errc::NotMutable:
            case Errc::InvalidKappa:
            case Errc::BadInput:
            case Errc::MissingScheme:
                return true;
            default:
                return false;
        }
    }

private:
    Errc code_;
};

}  // namespace tsys

#endif
