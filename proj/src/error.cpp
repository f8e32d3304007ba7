#include "galfold/error.hpp"

namespace galfold {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::ForeignRoot: return "ForeignRoot";
    case Errc::NotCoweight: return "NotCoweight";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::JunctionMismatch: return "JunctionMismatch";
    case Errc::EndpointNotVertex: return "EndpointNotVertex";
    case Errc::NotSimpleRoot: return "NotSimpleRoot";
    case Errc::NotOriginBased: return "NotOriginBased";
    case Errc::OperatorUndefined: return "OperatorUndefined";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::ChartMismatch: return "ChartMismatch";
    case Errc::RegularityViolated: return "RegularityViolated";
    case Errc::MarginExceeded: return "MarginExceeded";
    case Errc::NoWitness: return "NoWitness";
    case Errc::ParseError: return "ParseError";
    case Errc::RankUnsupported: return "RankUnsupported";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace galfold
