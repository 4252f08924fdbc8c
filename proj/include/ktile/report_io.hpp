#ifndef KTILE_REPORT_IO_HPP
#define KTILE_REPORT_IO_HPP

#include <iosfwd>
#include <string>

#include "ktile/identities.hpp"

namespace ktile {

// Report serializations. Values are decimal strings in JSON and CSV since
// they routinely exceed 64 bits. The CSV schema is fixed
// (identity_id,variant,k,n,lhs,rhs,matched) and carries asserted-range
// records only; exploration records travel in JSON and text.
std::string report_to_json(const VerificationReport& report);
void write_report_csv(std::ostream& out, const VerificationReport& report);
void write_report_text(std::ostream& out, const VerificationReport& report);

}  // namespace ktile

#endif  // KTILE_REPORT_IO_HPP
