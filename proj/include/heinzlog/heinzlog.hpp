#ifndef HEINZLOG_HEINZLOG_HPP
#define HEINZLOG_HEINZLOG_HPP

#include "heinzlog/errors.hpp"
#include "heinzlog/means.hpp"
#include "heinzlog/norms.hpp"
#include "heinzlog/report.hpp"
#include "heinzlog/matops.hpp"
#include "heinzlog/posdef.hpp"
#include "heinzlog/verify.hpp"
#include "heinzlog/report_io.hpp"

#endif  // HEINZLOG_HEINZLOG_HPP
