// Generated by scripts/gen_lebedev974.py. Do not edit.

#include "tramp/grid.hpp"

namespace tramp::detail {

const std::array<std::array<double, 3>, kLebedevNodeCount> kLebedev974 = {{
    {1, 0, 0},
    {-1, 0, 0},
    {0, 1, 0},
    {0, -1, 0},
    {0, 0, 1},
    {0, 0, -1},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573},
    {0.042929635453413467, 0.042929635453413467, 0.99815534502384651},
    {-0.042929635453413467, 0.042929635453413467, 0.99815534502384651},
    {0.042929635453413467, -0.042929635453413467, 0.99815534502384651},
    {0.042929635453413467, 0.042929635453413467, -0.99815534502384651},
    {-0.042929635453413467, -0.042929635453413467, 0.99815534502384651},
    {-0.042929635453413467, 0.042929635453413467, -0.99815534502384651},
    {0.042929635453413467, -0.042929635453413467, -0.99815534502384651},
    {-0.042929635453413467, -0.042929635453413467, -0.99815534502384651},
    {-0.042929635453413467, 0.99815534502384651, 0.042929635453413467},
    {0.042929635453413467, -0.99815534502384651, 0.042929635453413467},
    {0.042929635453413467, 0.99815534502384651, -0.042929635453413467},
    {-0.042929635453413467, -0.99815534502384651, 0.042929635453413467},
    {-0.042929635453413467, 0.99815534502384651, -0.042929635453413467},
    {0.042929635453413467, -0.99815534502384651, -0.042929635453413467},
    {-0.042929635453413467, -0.99815534502384651, -0.042929635453413467},
    {0.042929635453413467, 0.99815534502384651, 0.042929635453413467},
    {0.99815534502384651, 0.042929635453413467, 0.042929635453413467},
    {-0.99815534502384651, 0.042929635453413467, 0.042929635453413467},
    {0.99815534502384651, -0.042929635453413467, 0.042929635453413467},
    {0.99815534502384651, 0.042929635453413467, -0.042929635453413467},
    {-0.99815534502384651, -0.042929635453413467, 0.042929635453413467},
    {-0.99815534502384651, 0.042929635453413467, -0.042929635453413467},
    {0.99815534502384651, -0.042929635453413467, -0.042929635453413467},
    {-0.99815534502384651, -0.042929635453413467, -0.042929635453413467},
    {0.1051426854086404, 0.1051426854086404, 0.98888322435468556},
    {-0.1051426854086404, 0.1051426854086404, 0.98888322435468556},
    {0.1051426854086404, -0.1051426854086404, 0.98888322435468556},
    {0.1051426854086404, 0.1051426854086404, -0.98888322435468556},
    {-0.1051426854086404, -0.1051426854086404, 0.98888322435468556},
    {-0.1051426854086404, 0.1051426854086404, -0.98888322435468556},
    {0.1051426854086404, -0.1051426854086404, -0.98888322435468556},
    {-0.1051426854086404, -0.1051426854086404, -0.98888322435468556},
    {-0.1051426854086404, 0.98888322435468556, 0.1051426854086404},
    {0.1051426854086404, -0.98888322435468556, 0.1051426854086404},
    {0.1051426854086404, 0.98888322435468556, -0.1051426854086404},
    {-0.1051426854086404, -0.98888322435468556, 0.1051426854086404},
    {-0.1051426854086404, 0.98888322435468556, -0.1051426854086404},
    {0.1051426854086404, -0.98888322435468556, -0.1051426854086404},
    {-0.1051426854086404, -0.98888322435468556, -0.1051426854086404},
    {0.1051426854086404, 0.98888322435468556, 0.1051426854086404},
    {0.98888322435468556, 0.1051426854086404, 0.1051426854086404},
    {-0.98888322435468556, 0.1051426854086404, 0.1051426854086404},
    {0.98888322435468556, -0.1051426854086404, 0.1051426854086404},
    {0.98888322435468556, 0.1051426854086404, -0.1051426854086404},
    {-0.98888322435468556, -0.1051426854086404, 0.1051426854086404},
    {-0.98888322435468556, 0.1051426854086404, -0.1051426854086404},
    {0.98888322435468556, -0.1051426854086404, -0.1051426854086404},
    {-0.98888322435468556, -0.1051426854086404, -0.1051426854086404},
    {0.1750024867623087, 0.1750024867623087, 0.96889022043470741},
    {-0.1750024867623087, 0.1750024867623087, 0.96889022043470741},
    {0.1750024867623087, -0.1750024867623087, 0.96889022043470741},
    {0.1750024867623087, 0.1750024867623087, -0.96889022043470741},
    {-0.1750024867623087, -0.1750024867623087, 0.96889022043470741},
    {-0.1750024867623087, 0.1750024867623087, -0.96889022043470741},
    {0.1750024867623087, -0.1750024867623087, -0.96889022043470741},
    {-0.1750024867623087, -0.1750024867623087, -0.96889022043470741},
    {-0.1750024867623087, 0.96889022043470741, 0.1750024867623087},
    {0.1750024867623087, -0.96889022043470741, 0.1750024867623087},
    {0.1750024867623087, 0.96889022043470741, -0.1750024867623087},
    {-0.1750024867623087, -0.96889022043470741, 0.1750024867623087},
    {-0.1750024867623087, 0.96889022043470741, -0.1750024867623087},
    {0.1750024867623087, -0.96889022043470741, -0.1750024867623087},
    {-0.1750024867623087, -0.96889022043470741, -0.1750024867623087},
    {0.1750024867623087, 0.96889022043470741, 0.1750024867623087},
    {0.96889022043470741, 0.1750024867623087, 0.1750024867623087},
    {-0.96889022043470741, 0.1750024867623087, 0.1750024867623087},
    {0.96889022043470741, -0.1750024867623087, 0.1750024867623087},
    {0.96889022043470741, 0.1750024867623087, -0.1750024867623087},
    {-0.96889022043470741, -0.1750024867623087, 0.1750024867623087},
    {-0.96889022043470741, 0.1750024867623087, -0.1750024867623087},
    {0.96889022043470741, -0.1750024867623087, -0.1750024867623087},
    {-0.96889022043470741, -0.1750024867623087, -0.1750024867623087},
    {0.2477653379650257, 0.2477653379650257, 0.93660273040716313},
    {-0.2477653379650257, 0.2477653379650257, 0.93660273040716313},
    {0.2477653379650257, -0.2477653379650257, 0.93660273040716313},
    {0.2477653379650257, 0.2477653379650257, -0.93660273040716313},
    {-0.2477653379650257, -0.2477653379650257, 0.93660273040716313},
    {-0.2477653379650257, 0.2477653379650257, -0.93660273040716313},
    {0.2477653379650257, -0.2477653379650257, -0.93660273040716313},
    {-0.2477653379650257, -0.2477653379650257, -0.93660273040716313},
    {-0.2477653379650257, 0.93660273040716313, 0.2477653379650257},
    {0.2477653379650257, -0.93660273040716313, 0.2477653379650257},
    {0.2477653379650257, 0.93660273040716313, -0.2477653379650257},
    {-0.2477653379650257, -0.93660273040716313, 0.2477653379650257},
    {-0.2477653379650257, 0.93660273040716313, -0.2477653379650257},
    {0.2477653379650257, -0.93660273040716313, -0.2477653379650257},
    {-0.2477653379650257, -0.93660273040716313, -0.2477653379650257},
    {0.2477653379650257, 0.93660273040716313, 0.2477653379650257},
    {0.93660273040716313, 0.2477653379650257, 0.2477653379650257},
    {-0.93660273040716313, 0.2477653379650257, 0.2477653379650257},
    {0.93660273040716313, -0.2477653379650257, 0.2477653379650257},
    {0.93660273040716313, 0.2477653379650257, -0.2477653379650257},
    {-0.93660273040716313, -0.2477653379650257, 0.2477653379650257},
    {-0.93660273040716313, 0.2477653379650257, -0.2477653379650257},
    {0.93660273040716313, -0.2477653379650257, -0.2477653379650257},
    {-0.93660273040716313, -0.2477653379650257, -0.2477653379650257},
    {0.32065671239559568, 0.32065671239559568, 0.89126794264760612},
    {-0.32065671239559568, 0.32065671239559568, 0.89126794264760612},
    {0.32065671239559568, -0.32065671239559568, 0.89126794264760612},
    {0.32065671239559568, 0.32065671239559568, -0.89126794264760612},
    {-0.32065671239559568, -0.32065671239559568, 0.89126794264760612},
    {-0.32065671239559568, 0.32065671239559568, -0.89126794264760612},
    {0.32065671239559568, -0.32065671239559568, -0.89126794264760612},
    {-0.32065671239559568, -0.32065671239559568, -0.89126794264760612},
    {-0.32065671239559568, 0.89126794264760612, 0.32065671239559568},
    {0.32065671239559568, -0.89126794264760612, 0.32065671239559568},
    {0.32065671239559568, 0.89126794264760612, -0.32065671239559568},
    {-0.32065671239559568, -0.89126794264760612, 0.32065671239559568},
    {-0.32065671239559568, 0.89126794264760612, -0.32065671239559568},
    {0.32065671239559568, -0.89126794264760612, -0.32065671239559568},
    {-0.32065671239559568, -0.89126794264760612, -0.32065671239559568},
    {0.32065671239559568, 0.89126794264760612, 0.32065671239559568},
    {0.89126794264760612, 0.32065671239559568, 0.32065671239559568},
    {-0.89126794264760612, 0.32065671239559568, 0.32065671239559568},
    {0.89126794264760612, -0.32065671239559568, 0.32065671239559568},
    {0.89126794264760612, 0.32065671239559568, -0.32065671239559568},
    {-0.89126794264760612, -0.32065671239559568, 0.32065671239559568},
    {-0.89126794264760612, 0.32065671239559568, -0.32065671239559568},
    {0.89126794264760612, -0.32065671239559568, -0.32065671239559568},
    {-0.89126794264760612, -0.32065671239559568, -0.32065671239559568},
    {0.39165207498499832, 0.39165207498499832, 0.83259672370235194},
    {-0.39165207498499832, 0.39165207498499832, 0.83259672370235194},
    {0.39165207498499832, -0.39165207498499832, 0.83259672370235194},
    {0.39165207498499832, 0.39165207498499832, -0.83259672370235194},
    {-0.39165207498499832, -0.39165207498499832, 0.83259672370235194},
    {-0.39165207498499832, 0.39165207498499832, -0.83259672370235194},
    {0.39165207498499832, -0.39165207498499832, -0.83259672370235194},
    {-0.39165207498499832, -0.39165207498499832, -0.83259672370235194},
    {-0.39165207498499832, 0.83259672370235194, 0.39165207498499832},
    {0.39165207498499832, -0.83259672370235194, 0.39165207498499832},
    {0.39165207498499832, 0.83259672370235194, -0.39165207498499832},
    {-0.39165207498499832, -0.83259672370235194, 0.39165207498499832},
    {-0.39165207498499832, 0.83259672370235194, -0.39165207498499832},
    {0.39165207498499832, -0.83259672370235194, -0.39165207498499832},
    {-0.39165207498499832, -0.83259672370235194, -0.39165207498499832},
    {0.39165207498499832, 0.83259672370235194, 0.39165207498499832},
    {0.83259672370235194, 0.39165207498499832, 0.39165207498499832},
    {-0.83259672370235194, 0.39165207498499832, 0.39165207498499832},
    {0.83259672370235194, -0.39165207498499832, 0.39165207498499832},
    {0.83259672370235194, 0.39165207498499832, -0.39165207498499832},
    {-0.83259672370235194, -0.39165207498499832, 0.39165207498499832},
    {-0.83259672370235194, 0.39165207498499832, -0.39165207498499832},
    {0.83259672370235194, -0.39165207498499832, -0.39165207498499832},
    {-0.83259672370235194, -0.39165207498499832, -0.39165207498499832},
    {0.4590825874187624, 0.4590825874187624, 0.76058290531525141},
    {-0.4590825874187624, 0.4590825874187624, 0.76058290531525141},
    {0.4590825874187624, -0.4590825874187624, 0.76058290531525141},
    {0.4590825874187624, 0.4590825874187624, -0.76058290531525141},
    {-0.4590825874187624, -0.4590825874187624, 0.76058290531525141},
    {-0.4590825874187624, 0.4590825874187624, -0.76058290531525141},
    {0.4590825874187624, -0.4590825874187624, -0.76058290531525141},
    {-0.4590825874187624, -0.4590825874187624, -0.76058290531525141},
    {-0.4590825874187624, 0.76058290531525141, 0.4590825874187624},
    {0.4590825874187624, -0.76058290531525141, 0.4590825874187624},
    {0.4590825874187624, 0.76058290531525141, -0.4590825874187624},
    {-0.4590825874187624, -0.76058290531525141, 0.4590825874187624},
    {-0.4590825874187624, 0.76058290531525141, -0.4590825874187624},
    {0.4590825874187624, -0.76058290531525141, -0.4590825874187624},
    {-0.4590825874187624, -0.76058290531525141, -0.4590825874187624},
    {0.4590825874187624, 0.76058290531525141, 0.4590825874187624},
    {0.76058290531525141, 0.4590825874187624, 0.4590825874187624},
    {-0.76058290531525141, 0.4590825874187624, 0.4590825874187624},
    {0.76058290531525141, -0.4590825874187624, 0.4590825874187624},
    {0.76058290531525141, 0.4590825874187624, -0.4590825874187624},
    {-0.76058290531525141, -0.4590825874187624, 0.4590825874187624},
    {-0.76058290531525141, 0.4590825874187624, -0.4590825874187624},
    {0.76058290531525141, -0.4590825874187624, -0.4590825874187624},
    {-0.76058290531525141, -0.4590825874187624, -0.4590825874187624},
    {0.52145638884158607, 0.52145638884158607, 0.6754009691084143},
    {-0.52145638884158607, 0.52145638884158607, 0.6754009691084143},
    {0.52145638884158607, -0.52145638884158607, 0.6754009691084143},
    {0.52145638884158607, 0.52145638884158607, -0.6754009691084143},
    {-0.52145638884158607, -0.52145638884158607, 0.6754009691084143},
    {-0.52145638884158607, 0.52145638884158607, -0.6754009691084143},
    {0.52145638884158607, -0.52145638884158607, -0.6754009691084143},
    {-0.52145638884158607, -0.52145638884158607, -0.6754009691084143},
    {-0.52145638884158607, 0.6754009691084143, 0.52145638884158607},
    {0.52145638884158607, -0.6754009691084143, 0.52145638884158607},
    {0.52145638884158607, 0.6754009691084143, -0.52145638884158607},
    {-0.52145638884158607, -0.6754009691084143, 0.52145638884158607},
    {-0.52145638884158607, 0.6754009691084143, -0.52145638884158607},
    {0.52145638884158607, -0.6754009691084143, -0.52145638884158607},
    {-0.52145638884158607, -0.6754009691084143, -0.52145638884158607},
    {0.52145638884158607, 0.6754009691084143, 0.52145638884158607},
    {0.6754009691084143, 0.52145638884158607, 0.52145638884158607},
    {-0.6754009691084143, 0.52145638884158607, 0.52145638884158607},
    {0.6754009691084143, -0.52145638884158607, 0.52145638884158607},
    {0.6754009691084143, 0.52145638884158607, -0.52145638884158607},
    {-0.6754009691084143, -0.52145638884158607, 0.52145638884158607},
    {-0.6754009691084143, 0.52145638884158607, -0.52145638884158607},
    {0.6754009691084143, -0.52145638884158607, -0.52145638884158607},
    {-0.6754009691084143, -0.52145638884158607, -0.52145638884158607},
    {0.62531702446541992, 0.62531702446541992, 0.46685890569574318},
    {-0.62531702446541992, 0.62531702446541992, 0.46685890569574318},
    {0.62531702446541992, -0.62531702446541992, 0.46685890569574318},
    {0.62531702446541992, 0.62531702446541992, -0.46685890569574318},
    {-0.62531702446541992, -0.62531702446541992, 0.46685890569574318},
    {-0.62531702446541992, 0.62531702446541992, -0.46685890569574318},
    {0.62531702446541992, -0.62531702446541992, -0.46685890569574318},
    {-0.62531702446541992, -0.62531702446541992, -0.46685890569574318},
    {-0.62531702446541992, 0.46685890569574318, 0.62531702446541992},
    {0.62531702446541992, -0.46685890569574318, 0.62531702446541992},
    {0.62531702446541992, 0.46685890569574318, -0.62531702446541992},
    {-0.62531702446541992, -0.46685890569574318, 0.62531702446541992},
    {-0.62531702446541992, 0.46685890569574318, -0.62531702446541992},
    {0.62531702446541992, -0.46685890569574318, -0.62531702446541992},
    {-0.62531702446541992, -0.46685890569574318, -0.62531702446541992},
    {0.62531702446541992, 0.46685890569574318, 0.62531702446541992},
    {0.46685890569574318, 0.62531702446541992, 0.62531702446541992},
    {-0.46685890569574318, 0.62531702446541992, 0.62531702446541992},
    {0.46685890569574318, -0.62531702446541992, 0.62531702446541992},
    {0.46685890569574318, 0.62531702446541992, -0.62531702446541992},
    {-0.46685890569574318, -0.62531702446541992, 0.62531702446541992},
    {-0.46685890569574318, 0.62531702446541992, -0.62531702446541992},
    {0.46685890569574318, -0.62531702446541992, -0.62531702446541992},
    {-0.46685890569574318, -0.62531702446541992, -0.62531702446541992},
    {0.66379267445231704, 0.66379267445231704, 0.34461365423743795},
    {-0.66379267445231704, 0.66379267445231704, 0.34461365423743795},
    {0.66379267445231704, -0.66379267445231704, 0.34461365423743795},
    {0.66379267445231704, 0.66379267445231704, -0.34461365423743795},
    {-0.66379267445231704, -0.66379267445231704, 0.34461365423743795},
    {-0.66379267445231704, 0.66379267445231704, -0.34461365423743795},
    {0.66379267445231704, -0.66379267445231704, -0.34461365423743795},
    {-0.66379267445231704, -0.66379267445231704, -0.34461365423743795},
    {-0.66379267445231704, 0.34461365423743795, 0.66379267445231704},
    {0.66379267445231704, -0.34461365423743795, 0.66379267445231704},
    {0.66379267445231704, 0.34461365423743795, -0.66379267445231704},
    {-0.66379267445231704, -0.34461365423743795, 0.66379267445231704},
    {-0.66379267445231704, 0.34461365423743795, -0.66379267445231704},
    {0.66379267445231704, -0.34461365423743795, -0.66379267445231704},
    {-0.66379267445231704, -0.34461365423743795, -0.66379267445231704},
    {0.66379267445231704, 0.34461365423743795, 0.66379267445231704},
    {0.34461365423743795, 0.66379267445231704, 0.66379267445231704},
    {-0.34461365423743795, 0.66379267445231704, 0.66379267445231704},
    {0.34461365423743795, -0.66379267445231704, 0.66379267445231704},
    {0.34461365423743795, 0.66379267445231704, -0.66379267445231704},
    {-0.34461365423743795, -0.66379267445231704, 0.66379267445231704},
    {-0.34461365423743795, 0.66379267445231704, -0.66379267445231704},
    {0.34461365423743795, -0.66379267445231704, -0.66379267445231704},
    {-0.34461365423743795, -0.66379267445231704, -0.66379267445231704},
    {0.69104103984983012, 0.69104103984983012, 0.21195415185018429},
    {-0.69104103984983012, 0.69104103984983012, 0.21195415185018429},
    {0.69104103984983012, -0.69104103984983012, 0.21195415185018429},
    {0.69104103984983012, 0.69104103984983012, -0.21195415185018429},
    {-0.69104103984983012, -0.69104103984983012, 0.21195415185018429},
    {-0.69104103984983012, 0.69104103984983012, -0.21195415185018429},
    {0.69104103984983012, -0.69104103984983012, -0.21195415185018429},
    {-0.69104103984983012, -0.69104103984983012, -0.21195415185018429},
    {-0.69104103984983012, 0.21195415185018429, 0.69104103984983012},
    {0.69104103984983012, -0.21195415185018429, 0.69104103984983012},
    {0.69104103984983012, 0.21195415185018429, -0.69104103984983012},
    {-0.69104103984983012, -0.21195415185018429, 0.69104103984983012},
    {-0.69104103984983012, 0.21195415185018429, -0.69104103984983012},
    {0.69104103984983012, -0.21195415185018429, -0.69104103984983012},
    {-0.69104103984983012, -0.21195415185018429, -0.69104103984983012},
    {0.69104103984983012, 0.21195415185018429, 0.69104103984983012},
    {0.21195415185018429, 0.69104103984983012, 0.69104103984983012},
    {-0.21195415185018429, 0.69104103984983012, 0.69104103984983012},
    {0.21195415185018429, -0.69104103984983012, 0.69104103984983012},
    {0.21195415185018429, 0.69104103984983012, -0.69104103984983012},
    {-0.21195415185018429, -0.69104103984983012, 0.69104103984983012},
    {-0.21195415185018429, 0.69104103984983012, -0.69104103984983012},
    {0.21195415185018429, -0.69104103984983012, -0.69104103984983012},
    {-0.21195415185018429, -0.69104103984983012, -0.69104103984983012},
    {0.70529070074577604, 0.70529070074577604, 0.071624401449955549},
    {-0.70529070074577604, 0.70529070074577604, 0.071624401449955549},
    {0.70529070074577604, -0.70529070074577604, 0.071624401449955549},
    {0.70529070074577604, 0.70529070074577604, -0.071624401449955549},
    {-0.70529070074577604, -0.70529070074577604, 0.071624401449955549},
    {-0.70529070074577604, 0.70529070074577604, -0.071624401449955549},
    {0.70529070074577604, -0.70529070074577604, -0.071624401449955549},
    {-0.70529070074577604, -0.70529070074577604, -0.071624401449955549},
    {-0.70529070074577604, 0.071624401449955549, 0.70529070074577604},
    {0.70529070074577604, -0.071624401449955549, 0.70529070074577604},
    {0.70529070074577604, 0.071624401449955549, -0.70529070074577604},
    {-0.70529070074577604, -0.071624401449955549, 0.70529070074577604},
    {-0.70529070074577604, 0.071624401449955549, -0.70529070074577604},
    {0.70529070074577604, -0.071624401449955549, -0.70529070074577604},
    {-0.70529070074577604, -0.071624401449955549, -0.70529070074577604},
    {0.70529070074577604, 0.071624401449955549, 0.70529070074577604},
    {0.071624401449955549, 0.70529070074577604, 0.70529070074577604},
    {-0.071624401449955549, 0.70529070074577604, 0.70529070074577604},
    {0.071624401449955549, -0.70529070074577604, 0.70529070074577604},
    {0.071624401449955549, 0.70529070074577604, -0.70529070074577604},
    {-0.071624401449955549, -0.70529070074577604, 0.70529070074577604},
    {-0.071624401449955549, 0.70529070074577604, -0.70529070074577604},
    {0.071624401449955549, -0.70529070074577604, -0.70529070074577604},
    {-0.071624401449955549, -0.70529070074577604, -0.70529070074577604},
    {0.123668676265799, 0.99232356543149014, 0},
    {-0.123668676265799, 0.99232356543149014, 0},
    {0.123668676265799, -0.99232356543149014, 0},
    {-0.123668676265799, -0.99232356543149014, 0},
    {0.99232356543149014, 0.123668676265799, 0},
    {-0.99232356543149014, 0.123668676265799, 0},
    {0.99232356543149014, -0.123668676265799, 0},
    {-0.99232356543149014, -0.123668676265799, 0},
    {0.123668676265799, 0, 0.99232356543149014},
    {-0.123668676265799, 0, 0.99232356543149014},
    {0.123668676265799, 0, -0.99232356543149014},
    {-0.123668676265799, 0, -0.99232356543149014},
    {0.99232356543149014, 0, 0.123668676265799},
    {-0.99232356543149014, 0, 0.123668676265799},
    {0.99232356543149014, 0, -0.123668676265799},
    {-0.99232356543149014, 0, -0.123668676265799},
    {0, 0.123668676265799, 0.99232356543149014},
    {0, -0.123668676265799, 0.99232356543149014},
    {0, 0.123668676265799, -0.99232356543149014},
    {0, -0.123668676265799, -0.99232356543149014},
    {0, 0.99232356543149014, 0.123668676265799},
    {0, -0.99232356543149014, 0.123668676265799},
    {0, 0.99232356543149014, -0.123668676265799},
    {0, -0.99232356543149014, -0.123668676265799},
    {0.2940777114468387, 0.95578151249654841, 0},
    {-0.2940777114468387, 0.95578151249654841, 0},
    {0.2940777114468387, -0.95578151249654841, 0},
    {-0.2940777114468387, -0.95578151249654841, 0},
    {0.95578151249654841, 0.2940777114468387, 0},
    {-0.95578151249654841, 0.2940777114468387, 0},
    {0.95578151249654841, -0.2940777114468387, 0},
    {-0.95578151249654841, -0.2940777114468387, 0},
    {0.2940777114468387, 0, 0.95578151249654841},
    {-0.2940777114468387, 0, 0.95578151249654841},
    {0.2940777114468387, 0, -0.95578151249654841},
    {-0.2940777114468387, 0, -0.95578151249654841},
    {0.95578151249654841, 0, 0.2940777114468387},
    {-0.95578151249654841, 0, 0.2940777114468387},
    {0.95578151249654841, 0, -0.2940777114468387},
    {-0.95578151249654841, 0, -0.2940777114468387},
    {0, 0.2940777114468387, 0.95578151249654841},
    {0, -0.2940777114468387, 0.95578151249654841},
    {0, 0.2940777114468387, -0.95578151249654841},
    {0, -0.2940777114468387, -0.95578151249654841},
    {0, 0.95578151249654841, 0.2940777114468387},
    {0, -0.95578151249654841, 0.2940777114468387},
    {0, 0.95578151249654841, -0.2940777114468387},
    {0, -0.95578151249654841, -0.2940777114468387},
    {0.46977538492076493, 0.88278598070118164, 0},
    {-0.46977538492076493, 0.88278598070118164, 0},
    {0.46977538492076493, -0.88278598070118164, 0},
    {-0.46977538492076493, -0.88278598070118164, 0},
    {0.88278598070118164, 0.46977538492076493, 0},
    {-0.88278598070118164, 0.46977538492076493, 0},
    {0.88278598070118164, -0.46977538492076493, 0},
    {-0.88278598070118164, -0.46977538492076493, 0},
    {0.46977538492076493, 0, 0.88278598070118164},
    {-0.46977538492076493, 0, 0.88278598070118164},
    {0.46977538492076493, 0, -0.88278598070118164},
    {-0.46977538492076493, 0, -0.88278598070118164},
    {0.88278598070118164, 0, 0.46977538492076493},
    {-0.88278598070118164, 0, 0.46977538492076493},
    {0.88278598070118164, 0, -0.46977538492076493},
    {-0.88278598070118164, 0, -0.46977538492076493},
    {0, 0.46977538492076493, 0.88278598070118164},
    {0, -0.46977538492076493, 0.88278598070118164},
    {0, 0.46977538492076493, -0.88278598070118164},
    {0, -0.46977538492076493, -0.88278598070118164},
    {0, 0.88278598070118164, 0.46977538492076493},
    {0, -0.88278598070118164, 0.46977538492076493},
    {0, 0.88278598070118164, -0.46977538492076493},
    {0, -0.88278598070118164, -0.46977538492076493},
    {0.63345632411395669, 0.77377844725737477, 0},
    {-0.63345632411395669, 0.77377844725737477, 0},
    {0.63345632411395669, -0.77377844725737477, 0},
    {-0.63345632411395669, -0.77377844725737477, 0},
    {0.77377844725737477, 0.63345632411395669, 0},
    {-0.77377844725737477, 0.63345632411395669, 0},
    {0.77377844725737477, -0.63345632411395669, 0},
    {-0.77377844725737477, -0.63345632411395669, 0},
    {0.63345632411395669, 0, 0.77377844725737477},
    {-0.63345632411395669, 0, 0.77377844725737477},
    {0.63345632411395669, 0, -0.77377844725737477},
    {-0.63345632411395669, 0, -0.77377844725737477},
    {0.77377844725737477, 0, 0.63345632411395669},
    {-0.77377844725737477, 0, 0.63345632411395669},
    {0.77377844725737477, 0, -0.63345632411395669},
    {-0.77377844725737477, 0, -0.63345632411395669},
    {0, 0.63345632411395669, 0.77377844725737477},
    {0, -0.63345632411395669, 0.77377844725737477},
    {0, 0.63345632411395669, -0.77377844725737477},
    {0, -0.63345632411395669, -0.77377844725737477},
    {0, 0.77377844725737477, 0.63345632411395669},
    {0, -0.77377844725737477, 0.63345632411395669},
    {0, 0.77377844725737477, -0.63345632411395669},
    {0, -0.77377844725737477, -0.63345632411395669},
    {0.059740486141813418, 0.20291287527775231, 0.97737272284530996},
    {-0.059740486141813418, 0.20291287527775231, 0.97737272284530996},
    {0.059740486141813418, -0.20291287527775231, 0.97737272284530996},
    {0.059740486141813418, 0.20291287527775231, -0.97737272284530996},
    {-0.059740486141813418, -0.20291287527775231, 0.97737272284530996},
    {0.059740486141813418, -0.20291287527775231, -0.97737272284530996},
    {-0.059740486141813418, 0.20291287527775231, -0.97737272284530996},
    {-0.059740486141813418, -0.20291287527775231, -0.97737272284530996},
    {0.20291287527775231, 0.059740486141813418, 0.97737272284530996},
    {-0.20291287527775231, 0.059740486141813418, 0.97737272284530996},
    {0.20291287527775231, -0.059740486141813418, 0.97737272284530996},
    {0.20291287527775231, 0.059740486141813418, -0.97737272284530996},
    {-0.20291287527775231, -0.059740486141813418, 0.97737272284530996},
    {0.20291287527775231, -0.059740486141813418, -0.97737272284530996},
    {-0.20291287527775231, 0.059740486141813418, -0.97737272284530996},
    {-0.20291287527775231, -0.059740486141813418, -0.97737272284530996},
    {0.97737272284530996, 0.059740486141813418, 0.20291287527775231},
    {-0.97737272284530996, 0.059740486141813418, 0.20291287527775231},
    {0.97737272284530996, -0.059740486141813418, 0.20291287527775231},
    {0.97737272284530996, 0.059740486141813418, -0.20291287527775231},
    {-0.97737272284530996, -0.059740486141813418, 0.20291287527775231},
    {0.97737272284530996, -0.059740486141813418, -0.20291287527775231},
    {-0.97737272284530996, 0.059740486141813418, -0.20291287527775231},
    {-0.97737272284530996, -0.059740486141813418, -0.20291287527775231},
    {0.97737272284530996, 0.20291287527775231, 0.059740486141813418},
    {-0.97737272284530996, 0.20291287527775231, 0.059740486141813418},
    {0.97737272284530996, -0.20291287527775231, 0.059740486141813418},
    {0.97737272284530996, 0.20291287527775231, -0.059740486141813418},
    {-0.97737272284530996, -0.20291287527775231, 0.059740486141813418},
    {0.97737272284530996, -0.20291287527775231, -0.059740486141813418},
    {-0.97737272284530996, 0.20291287527775231, -0.059740486141813418},
    {-0.97737272284530996, -0.20291287527775231, -0.059740486141813418},
    {0.059740486141813418, 0.97737272284530996, 0.20291287527775231},
    {-0.059740486141813418, 0.97737272284530996, 0.20291287527775231},
    {0.059740486141813418, -0.97737272284530996, 0.20291287527775231},
    {0.059740486141813418, 0.97737272284530996, -0.20291287527775231},
    {-0.059740486141813418, -0.97737272284530996, 0.20291287527775231},
    {0.059740486141813418, -0.97737272284530996, -0.20291287527775231},
    {-0.059740486141813418, 0.97737272284530996, -0.20291287527775231},
    {-0.059740486141813418, -0.97737272284530996, -0.20291287527775231},
    {0.20291287527775231, 0.97737272284530996, 0.059740486141813418},
    {-0.20291287527775231, 0.97737272284530996, 0.059740486141813418},
    {0.20291287527775231, -0.97737272284530996, 0.059740486141813418},
    {0.20291287527775231, 0.97737272284530996, -0.059740486141813418},
    {-0.20291287527775231, -0.97737272284530996, 0.059740486141813418},
    {0.20291287527775231, -0.97737272284530996, -0.059740486141813418},
    {-0.20291287527775231, 0.97737272284530996, -0.059740486141813418},
    {-0.20291287527775231, -0.97737272284530996, -0.059740486141813418},
    {0.13757604084736361, 0.46026219424840542, 0.87705846186580272},
    {-0.13757604084736361, 0.46026219424840542, 0.87705846186580272},
    {0.13757604084736361, -0.46026219424840542, 0.87705846186580272},
    {0.13757604084736361, 0.46026219424840542, -0.87705846186580272},
    {-0.13757604084736361, -0.46026219424840542, 0.87705846186580272},
    {0.13757604084736361, -0.46026219424840542, -0.87705846186580272},
    {-0.13757604084736361, 0.46026219424840542, -0.87705846186580272},
    {-0.13757604084736361, -0.46026219424840542, -0.87705846186580272},
    {0.46026219424840542, 0.13757604084736361, 0.87705846186580272},
    {-0.46026219424840542, 0.13757604084736361, 0.87705846186580272},
    {0.46026219424840542, -0.13757604084736361, 0.87705846186580272},
    {0.46026219424840542, 0.13757604084736361, -0.87705846186580272},
    {-0.46026219424840542, -0.13757604084736361, 0.87705846186580272},
    {0.46026219424840542, -0.13757604084736361, -0.87705846186580272},
    {-0.46026219424840542, 0.13757604084736361, -0.87705846186580272},
    {-0.46026219424840542, -0.13757604084736361, -0.87705846186580272},
    {0.87705846186580272, 0.13757604084736361, 0.46026219424840542},
    {-0.87705846186580272, 0.13757604084736361, 0.46026219424840542},
    {0.87705846186580272, -0.13757604084736361, 0.46026219424840542},
    {0.87705846186580272, 0.13757604084736361, -0.46026219424840542},
    {-0.87705846186580272, -0.13757604084736361, 0.46026219424840542},
    {0.87705846186580272, -0.13757604084736361, -0.46026219424840542},
    {-0.87705846186580272, 0.13757604084736361, -0.46026219424840542},
    {-0.87705846186580272, -0.13757604084736361, -0.46026219424840542},
    {0.87705846186580272, 0.46026219424840542, 0.13757604084736361},
    {-0.87705846186580272, 0.46026219424840542, 0.13757604084736361},
    {0.87705846186580272, -0.46026219424840542, 0.13757604084736361},
    {0.87705846186580272, 0.46026219424840542, -0.13757604084736361},
    {-0.87705846186580272, -0.46026219424840542, 0.13757604084736361},
    {0.87705846186580272, -0.46026219424840542, -0.13757604084736361},
    {-0.87705846186580272, 0.46026219424840542, -0.13757604084736361},
    {-0.87705846186580272, -0.46026219424840542, -0.13757604084736361},
    {0.13757604084736361, 0.87705846186580272, 0.46026219424840542},
    {-0.13757604084736361, 0.87705846186580272, 0.46026219424840542},
    {0.13757604084736361, -0.87705846186580272, 0.46026219424840542},
    {0.13757604084736361, 0.87705846186580272, -0.46026219424840542},
    {-0.13757604084736361, -0.87705846186580272, 0.46026219424840542},
    {0.13757604084736361, -0.87705846186580272, -0.46026219424840542},
    {-0.13757604084736361, 0.87705846186580272, -0.46026219424840542},
    {-0.13757604084736361, -0.87705846186580272, -0.46026219424840542},
    {0.46026219424840542, 0.87705846186580272, 0.13757604084736361},
    {-0.46026219424840542, 0.87705846186580272, 0.13757604084736361},
    {0.46026219424840542, -0.87705846186580272, 0.13757604084736361},
    {0.46026219424840542, 0.87705846186580272, -0.13757604084736361},
    {-0.46026219424840542, -0.87705846186580272, 0.13757604084736361},
    {0.46026219424840542, -0.87705846186580272, -0.13757604084736361},
    {-0.46026219424840542, 0.87705846186580272, -0.13757604084736361},
    {-0.46026219424840542, -0.87705846186580272, -0.13757604084736361},
    {0.33910165263362863, 0.50306739996620364, 0.7949422999642084},
    {-0.33910165263362863, 0.50306739996620364, 0.7949422999642084},
    {0.33910165263362863, -0.50306739996620364, 0.7949422999642084},
    {0.33910165263362863, 0.50306739996620364, -0.7949422999642084},
    {-0.33910165263362863, -0.50306739996620364, 0.7949422999642084},
    {0.33910165263362863, -0.50306739996620364, -0.7949422999642084},
    {-0.33910165263362863, 0.50306739996620364, -0.7949422999642084},
    {-0.33910165263362863, -0.50306739996620364, -0.7949422999642084},
    {0.50306739996620364, 0.33910165263362863, 0.7949422999642084},
    {-0.50306739996620364, 0.33910165263362863, 0.7949422999642084},
    {0.50306739996620364, -0.33910165263362863, 0.7949422999642084},
    {0.50306739996620364, 0.33910165263362863, -0.7949422999642084},
    {-0.50306739996620364, -0.33910165263362863, 0.7949422999642084},
    {0.50306739996620364, -0.33910165263362863, -0.7949422999642084},
    {-0.50306739996620364, 0.33910165263362863, -0.7949422999642084},
    {-0.50306739996620364, -0.33910165263362863, -0.7949422999642084},
    {0.7949422999642084, 0.33910165263362863, 0.50306739996620364},
    {-0.7949422999642084, 0.33910165263362863, 0.50306739996620364},
    {0.7949422999642084, -0.33910165263362863, 0.50306739996620364},
    {0.7949422999642084, 0.33910165263362863, -0.50306739996620364},
    {-0.7949422999642084, -0.33910165263362863, 0.50306739996620364},
    {0.7949422999642084, -0.33910165263362863, -0.50306739996620364},
    {-0.7949422999642084, 0.33910165263362863, -0.50306739996620364},
    {-0.7949422999642084, -0.33910165263362863, -0.50306739996620364},
    {0.7949422999642084, 0.50306739996620364, 0.33910165263362863},
    {-0.7949422999642084, 0.50306739996620364, 0.33910165263362863},
    {0.7949422999642084, -0.50306739996620364, 0.33910165263362863},
    {0.7949422999642084, 0.50306739996620364, -0.33910165263362863},
    {-0.7949422999642084, -0.50306739996620364, 0.33910165263362863},
    {0.7949422999642084, -0.50306739996620364, -0.33910165263362863},
    {-0.7949422999642084, 0.50306739996620364, -0.33910165263362863},
    {-0.7949422999642084, -0.50306739996620364, -0.33910165263362863},
    {0.33910165263362863, 0.7949422999642084, 0.50306739996620364},
    {-0.33910165263362863, 0.7949422999642084, 0.50306739996620364},
    {0.33910165263362863, -0.7949422999642084, 0.50306739996620364},
    {0.33910165263362863, 0.7949422999642084, -0.50306739996620364},
    {-0.33910165263362863, -0.7949422999642084, 0.50306739996620364},
    {0.33910165263362863, -0.7949422999642084, -0.50306739996620364},
    {-0.33910165263362863, 0.7949422999642084, -0.50306739996620364},
    {-0.33910165263362863, -0.7949422999642084, -0.50306739996620364},
    {0.50306739996620364, 0.7949422999642084, 0.33910165263362863},
    {-0.50306739996620364, 0.7949422999642084, 0.33910165263362863},
    {0.50306739996620364, -0.7949422999642084, 0.33910165263362863},
    {0.50306739996620364, 0.7949422999642084, -0.33910165263362863},
    {-0.50306739996620364, -0.7949422999642084, 0.33910165263362863},
    {0.50306739996620364, -0.7949422999642084, -0.33910165263362863},
    {-0.50306739996620364, 0.7949422999642084, -0.33910165263362863},
    {-0.50306739996620364, -0.7949422999642084, -0.33910165263362863},
    {0.127167519143982, 0.28176064224421338, 0.95102016937438993},
    {-0.127167519143982, 0.28176064224421338, 0.95102016937438993},
    {0.127167519143982, -0.28176064224421338, 0.95102016937438993},
    {0.127167519143982, 0.28176064224421338, -0.95102016937438993},
    {-0.127167519143982, -0.28176064224421338, 0.95102016937438993},
    {0.127167519143982, -0.28176064224421338, -0.95102016937438993},
    {-0.127167519143982, 0.28176064224421338, -0.95102016937438993},
    {-0.127167519143982, -0.28176064224421338, -0.95102016937438993},
    {0.28176064224421338, 0.127167519143982, 0.95102016937438993},
    {-0.28176064224421338, 0.127167519143982, 0.95102016937438993},
    {0.28176064224421338, -0.127167519143982, 0.95102016937438993},
    {0.28176064224421338, 0.127167519143982, -0.95102016937438993},
    {-0.28176064224421338, -0.127167519143982, 0.95102016937438993},
    {0.28176064224421338, -0.127167519143982, -0.95102016937438993},
    {-0.28176064224421338, 0.127167519143982, -0.95102016937438993},
    {-0.28176064224421338, -0.127167519143982, -0.95102016937438993},
    {0.95102016937438993, 0.127167519143982, 0.28176064224421338},
    {-0.95102016937438993, 0.127167519143982, 0.28176064224421338},
    {0.95102016937438993, -0.127167519143982, 0.28176064224421338},
    {0.95102016937438993, 0.127167519143982, -0.28176064224421338},
    {-0.95102016937438993, -0.127167519143982, 0.28176064224421338},
    {0.95102016937438993, -0.127167519143982, -0.28176064224421338},
    {-0.95102016937438993, 0.127167519143982, -0.28176064224421338},
    {-0.95102016937438993, -0.127167519143982, -0.28176064224421338},
    {0.95102016937438993, 0.28176064224421338, 0.127167519143982},
    {-0.95102016937438993, 0.28176064224421338, 0.127167519143982},
    {0.95102016937438993, -0.28176064224421338, 0.127167519143982},
    {0.95102016937438993, 0.28176064224421338, -0.127167519143982},
    {-0.95102016937438993, -0.28176064224421338, 0.127167519143982},
    {0.95102016937438993, -0.28176064224421338, -0.127167519143982},
    {-0.95102016937438993, 0.28176064224421338, -0.127167519143982},
    {-0.95102016937438993, -0.28176064224421338, -0.127167519143982},
    {0.127167519143982, 0.95102016937438993, 0.28176064224421338},
    {-0.127167519143982, 0.95102016937438993, 0.28176064224421338},
    {0.127167519143982, -0.95102016937438993, 0.28176064224421338},
    {0.127167519143982, 0.95102016937438993, -0.28176064224421338},
    {-0.127167519143982, -0.95102016937438993, 0.28176064224421338},
    {0.127167519143982, -0.95102016937438993, -0.28176064224421338},
    {-0.127167519143982, 0.95102016937438993, -0.28176064224421338},
    {-0.127167519143982, -0.95102016937438993, -0.28176064224421338},
    {0.28176064224421338, 0.95102016937438993, 0.127167519143982},
    {-0.28176064224421338, 0.95102016937438993, 0.127167519143982},
    {0.28176064224421338, -0.95102016937438993, 0.127167519143982},
    {0.28176064224421338, 0.95102016937438993, -0.127167519143982},
    {-0.28176064224421338, -0.95102016937438993, 0.127167519143982},
    {0.28176064224421338, -0.95102016937438993, -0.127167519143982},
    {-0.28176064224421338, 0.95102016937438993, -0.127167519143982},
    {-0.28176064224421338, -0.95102016937438993, -0.127167519143982},
    {0.26931207404135121, 0.43315612917201568, 0.86014346160176203},
    {-0.26931207404135121, 0.43315612917201568, 0.86014346160176203},
    {0.26931207404135121, -0.43315612917201568, 0.86014346160176203},
    {0.26931207404135121, 0.43315612917201568, -0.86014346160176203},
    {-0.26931207404135121, -0.43315612917201568, 0.86014346160176203},
    {0.26931207404135121, -0.43315612917201568, -0.86014346160176203},
    {-0.26931207404135121, 0.43315612917201568, -0.86014346160176203},
    {-0.26931207404135121, -0.43315612917201568, -0.86014346160176203},
    {0.43315612917201568, 0.26931207404135121, 0.86014346160176203},
    {-0.43315612917201568, 0.26931207404135121, 0.86014346160176203},
    {0.43315612917201568, -0.26931207404135121, 0.86014346160176203},
    {0.43315612917201568, 0.26931207404135121, -0.86014346160176203},
    {-0.43315612917201568, -0.26931207404135121, 0.86014346160176203},
    {0.43315612917201568, -0.26931207404135121, -0.86014346160176203},
    {-0.43315612917201568, 0.26931207404135121, -0.86014346160176203},
    {-0.43315612917201568, -0.26931207404135121, -0.86014346160176203},
    {0.86014346160176203, 0.26931207404135121, 0.43315612917201568},
    {-0.86014346160176203, 0.26931207404135121, 0.43315612917201568},
    {0.86014346160176203, -0.26931207404135121, 0.43315612917201568},
    {0.86014346160176203, 0.26931207404135121, -0.43315612917201568},
    {-0.86014346160176203, -0.26931207404135121, 0.43315612917201568},
    {0.86014346160176203, -0.26931207404135121, -0.43315612917201568},
    {-0.86014346160176203, 0.26931207404135121, -0.43315612917201568},
    {-0.86014346160176203, -0.26931207404135121, -0.43315612917201568},
    {0.86014346160176203, 0.43315612917201568, 0.26931207404135121},
    {-0.86014346160176203, 0.43315612917201568, 0.26931207404135121},
    {0.86014346160176203, -0.43315612917201568, 0.26931207404135121},
    {0.86014346160176203, 0.43315612917201568, -0.26931207404135121},
    {-0.86014346160176203, -0.43315612917201568, 0.26931207404135121},
    {0.86014346160176203, -0.43315612917201568, -0.26931207404135121},
    {-0.86014346160176203, 0.43315612917201568, -0.26931207404135121},
    {-0.86014346160176203, -0.43315612917201568, -0.26931207404135121},
    {0.26931207404135121, 0.86014346160176203, 0.43315612917201568},
    {-0.26931207404135121, 0.86014346160176203, 0.43315612917201568},
    {0.26931207404135121, -0.86014346160176203, 0.43315612917201568},
    {0.26931207404135121, 0.86014346160176203, -0.43315612917201568},
    {-0.26931207404135121, -0.86014346160176203, 0.43315612917201568},
    {0.26931207404135121, -0.86014346160176203, -0.43315612917201568},
    {-0.26931207404135121, 0.86014346160176203, -0.43315612917201568},
    {-0.26931207404135121, -0.86014346160176203, -0.43315612917201568},
    {0.43315612917201568, 0.86014346160176203, 0.26931207404135121},
    {-0.43315612917201568, 0.86014346160176203, 0.26931207404135121},
    {0.43315612917201568, -0.86014346160176203, 0.26931207404135121},
    {0.43315612917201568, 0.86014346160176203, -0.26931207404135121},
    {-0.43315612917201568, -0.86014346160176203, 0.26931207404135121},
    {0.43315612917201568, -0.86014346160176203, -0.26931207404135121},
    {-0.43315612917201568, 0.86014346160176203, -0.26931207404135121},
    {-0.43315612917201568, -0.86014346160176203, -0.26931207404135121},
    {0.1419786452601918, 0.62561673585808142, 0.76710218622055826},
    {-0.1419786452601918, 0.62561673585808142, 0.76710218622055826},
    {0.1419786452601918, -0.62561673585808142, 0.76710218622055826},
    {0.1419786452601918, 0.62561673585808142, -0.76710218622055826},
    {-0.1419786452601918, -0.62561673585808142, 0.76710218622055826},
    {0.1419786452601918, -0.62561673585808142, -0.76710218622055826},
    {-0.1419786452601918, 0.62561673585808142, -0.76710218622055826},
    {-0.1419786452601918, -0.62561673585808142, -0.76710218622055826},
    {0.62561673585808142, 0.1419786452601918, 0.76710218622055826},
    {-0.62561673585808142, 0.1419786452601918, 0.76710218622055826},
    {0.62561673585808142, -0.1419786452601918, 0.76710218622055826},
    {0.62561673585808142, 0.1419786452601918, -0.76710218622055826},
    {-0.62561673585808142, -0.1419786452601918, 0.76710218622055826},
    {0.62561673585808142, -0.1419786452601918, -0.76710218622055826},
    {-0.62561673585808142, 0.1419786452601918, -0.76710218622055826},
    {-0.62561673585808142, -0.1419786452601918, -0.76710218622055826},
    {0.76710218622055826, 0.1419786452601918, 0.62561673585808142},
    {-0.76710218622055826, 0.1419786452601918, 0.62561673585808142},
    {0.76710218622055826, -0.1419786452601918, 0.62561673585808142},
    {0.76710218622055826, 0.1419786452601918, -0.62561673585808142},
    {-0.76710218622055826, -0.1419786452601918, 0.62561673585808142},
    {0.76710218622055826, -0.1419786452601918, -0.62561673585808142},
    {-0.76710218622055826, 0.1419786452601918, -0.62561673585808142},
    {-0.76710218622055826, -0.1419786452601918, -0.62561673585808142},
    {0.76710218622055826, 0.62561673585808142, 0.1419786452601918},
    {-0.76710218622055826, 0.62561673585808142, 0.1419786452601918},
    {0.76710218622055826, -0.62561673585808142, 0.1419786452601918},
    {0.76710218622055826, 0.62561673585808142, -0.1419786452601918},
    {-0.76710218622055826, -0.62561673585808142, 0.1419786452601918},
    {0.76710218622055826, -0.62561673585808142, -0.1419786452601918},
    {-0.76710218622055826, 0.62561673585808142, -0.1419786452601918},
    {-0.76710218622055826, -0.62561673585808142, -0.1419786452601918},
    {0.1419786452601918, 0.76710218622055826, 0.62561673585808142},
    {-0.1419786452601918, 0.76710218622055826, 0.62561673585808142},
    {0.1419786452601918, -0.76710218622055826, 0.62561673585808142},
    {0.1419786452601918, 0.76710218622055826, -0.62561673585808142},
    {-0.1419786452601918, -0.76710218622055826, 0.62561673585808142},
    {0.1419786452601918, -0.76710218622055826, -0.62561673585808142},
    {-0.1419786452601918, 0.76710218622055826, -0.62561673585808142},
    {-0.1419786452601918, -0.76710218622055826, -0.62561673585808142},
    {0.62561673585808142, 0.76710218622055826, 0.1419786452601918},
    {-0.62561673585808142, 0.76710218622055826, 0.1419786452601918},
    {0.62561673585808142, -0.76710218622055826, 0.1419786452601918},
    {0.62561673585808142, 0.76710218622055826, -0.1419786452601918},
    {-0.62561673585808142, -0.76710218622055826, 0.1419786452601918},
    {0.62561673585808142, -0.76710218622055826, -0.1419786452601918},
    {-0.62561673585808142, 0.76710218622055826, -0.1419786452601918},
    {-0.62561673585808142, -0.76710218622055826, -0.1419786452601918},
    {0.067092846007382551, 0.37983952168591573, 0.92261611073080896},
    {-0.067092846007382551, 0.37983952168591573, 0.92261611073080896},
    {0.067092846007382551, -0.37983952168591573, 0.92261611073080896},
    {0.067092846007382551, 0.37983952168591573, -0.92261611073080896},
    {-0.067092846007382551, -0.37983952168591573, 0.92261611073080896},
    {0.067092846007382551, -0.37983952168591573, -0.92261611073080896},
    {-0.067092846007382551, 0.37983952168591573, -0.92261611073080896},
    {-0.067092846007382551, -0.37983952168591573, -0.92261611073080896},
    {0.37983952168591573, 0.067092846007382551, 0.92261611073080896},
    {-0.37983952168591573, 0.067092846007382551, 0.92261611073080896},
    {0.37983952168591573, -0.067092846007382551, 0.92261611073080896},
    {0.37983952168591573, 0.067092846007382551, -0.92261611073080896},
    {-0.37983952168591573, -0.067092846007382551, 0.92261611073080896},
    {0.37983952168591573, -0.067092846007382551, -0.92261611073080896},
    {-0.37983952168591573, 0.067092846007382551, -0.92261611073080896},
    {-0.37983952168591573, -0.067092846007382551, -0.92261611073080896},
    {0.92261611073080896, 0.067092846007382551, 0.37983952168591573},
    {-0.92261611073080896, 0.067092846007382551, 0.37983952168591573},
    {0.92261611073080896, -0.067092846007382551, 0.37983952168591573},
    {0.92261611073080896, 0.067092846007382551, -0.37983952168591573},
    {-0.92261611073080896, -0.067092846007382551, 0.37983952168591573},
    {0.92261611073080896, -0.067092846007382551, -0.37983952168591573},
    {-0.92261611073080896, 0.067092846007382551, -0.37983952168591573},
    {-0.92261611073080896, -0.067092846007382551, -0.37983952168591573},
    {0.92261611073080896, 0.37983952168591573, 0.067092846007382551},
    {-0.92261611073080896, 0.37983952168591573, 0.067092846007382551},
    {0.92261611073080896, -0.37983952168591573, 0.067092846007382551},
    {0.92261611073080896, 0.37983952168591573, -0.067092846007382551},
    {-0.92261611073080896, -0.37983952168591573, 0.067092846007382551},
    {0.92261611073080896, -0.37983952168591573, -0.067092846007382551},
    {-0.92261611073080896, 0.37983952168591573, -0.067092846007382551},
    {-0.92261611073080896, -0.37983952168591573, -0.067092846007382551},
    {0.067092846007382551, 0.92261611073080896, 0.37983952168591573},
    {-0.067092846007382551, 0.92261611073080896, 0.37983952168591573},
    {0.067092846007382551, -0.92261611073080896, 0.37983952168591573},
    {0.067092846007382551, 0.92261611073080896, -0.37983952168591573},
    {-0.067092846007382551, -0.92261611073080896, 0.37983952168591573},
    {0.067092846007382551, -0.92261611073080896, -0.37983952168591573},
    {-0.067092846007382551, 0.92261611073080896, -0.37983952168591573},
    {-0.067092846007382551, -0.92261611073080896, -0.37983952168591573},
    {0.37983952168591573, 0.92261611073080896, 0.067092846007382551},
    {-0.37983952168591573, 0.92261611073080896, 0.067092846007382551},
    {0.37983952168591573, -0.92261611073080896, 0.067092846007382551},
    {0.37983952168591573, 0.92261611073080896, -0.067092846007382551},
    {-0.37983952168591573, -0.92261611073080896, 0.067092846007382551},
    {0.37983952168591573, -0.92261611073080896, -0.067092846007382551},
    {-0.37983952168591573, 0.92261611073080896, -0.067092846007382551},
    {-0.37983952168591573, -0.92261611073080896, -0.067092846007382551},
    {0.070577381832561722, 0.55175054214235197, 0.8310175524134743},
    {-0.070577381832561722, 0.55175054214235197, 0.8310175524134743},
    {0.070577381832561722, -0.55175054214235197, 0.8310175524134743},
    {0.070577381832561722, 0.55175054214235197, -0.8310175524134743},
    {-0.070577381832561722, -0.55175054214235197, 0.8310175524134743},
    {0.070577381832561722, -0.55175054214235197, -0.8310175524134743},
    {-0.070577381832561722, 0.55175054214235197, -0.8310175524134743},
    {-0.070577381832561722, -0.55175054214235197, -0.8310175524134743},
    {0.55175054214235197, 0.070577381832561722, 0.8310175524134743},
    {-0.55175054214235197, 0.070577381832561722, 0.8310175524134743},
    {0.55175054214235197, -0.070577381832561722, 0.8310175524134743},
    {0.55175054214235197, 0.070577381832561722, -0.8310175524134743},
    {-0.55175054214235197, -0.070577381832561722, 0.8310175524134743},
    {0.55175054214235197, -0.070577381832561722, -0.8310175524134743},
    {-0.55175054214235197, 0.070577381832561722, -0.8310175524134743},
    {-0.55175054214235197, -0.070577381832561722, -0.8310175524134743},
    {0.8310175524134743, 0.070577381832561722, 0.55175054214235197},
    {-0.8310175524134743, 0.070577381832561722, 0.55175054214235197},
    {0.8310175524134743, -0.070577381832561722, 0.55175054214235197},
    {0.8310175524134743, 0.070577381832561722, -0.55175054214235197},
    {-0.8310175524134743, -0.070577381832561722, 0.55175054214235197},
    {0.8310175524134743, -0.070577381832561722, -0.55175054214235197},
    {-0.8310175524134743, 0.070577381832561722, -0.55175054214235197},
    {-0.8310175524134743, -0.070577381832561722, -0.55175054214235197},
    {0.8310175524134743, 0.55175054214235197, 0.070577381832561722},
    {-0.8310175524134743, 0.55175054214235197, 0.070577381832561722},
    {0.8310175524134743, -0.55175054214235197, 0.070577381832561722},
    {0.8310175524134743, 0.55175054214235197, -0.070577381832561722},
    {-0.8310175524134743, -0.55175054214235197, 0.070577381832561722},
    {0.8310175524134743, -0.55175054214235197, -0.070577381832561722},
    {-0.8310175524134743, 0.55175054214235197, -0.070577381832561722},
    {-0.8310175524134743, -0.55175054214235197, -0.070577381832561722},
    {0.070577381832561722, 0.8310175524134743, 0.55175054214235197},
    {-0.070577381832561722, 0.8310175524134743, 0.55175054214235197},
    {0.070577381832561722, -0.8310175524134743, 0.55175054214235197},
    {0.070577381832561722, 0.8310175524134743, -0.55175054214235197},
    {-0.070577381832561722, -0.8310175524134743, 0.55175054214235197},
    {0.070577381832561722, -0.8310175524134743, -0.55175054214235197},
    {-0.070577381832561722, 0.8310175524134743, -0.55175054214235197},
    {-0.070577381832561722, -0.8310175524134743, -0.55175054214235197},
    {0.55175054214235197, 0.8310175524134743, 0.070577381832561722},
    {-0.55175054214235197, 0.8310175524134743, 0.070577381832561722},
    {0.55175054214235197, -0.8310175524134743, 0.070577381832561722},
    {0.55175054214235197, 0.8310175524134743, -0.070577381832561722},
    {-0.55175054214235197, -0.8310175524134743, 0.070577381832561722},
    {0.55175054214235197, -0.8310175524134743, -0.070577381832561722},
    {-0.55175054214235197, 0.8310175524134743, -0.070577381832561722},
    {-0.55175054214235197, -0.8310175524134743, -0.070577381832561722},
    {0.27838884778821549, 0.60296191561591872, 0.74762061083408571},
    {-0.27838884778821549, 0.60296191561591872, 0.74762061083408571},
    {0.27838884778821549, -0.60296191561591872, 0.74762061083408571},
    {0.27838884778821549, 0.60296191561591872, -0.74762061083408571},
    {-0.27838884778821549, -0.60296191561591872, 0.74762061083408571},
    {0.27838884778821549, -0.60296191561591872, -0.74762061083408571},
    {-0.27838884778821549, 0.60296191561591872, -0.74762061083408571},
    {-0.27838884778821549, -0.60296191561591872, -0.74762061083408571},
    {0.60296191561591872, 0.27838884778821549, 0.74762061083408571},
    {-0.60296191561591872, 0.27838884778821549, 0.74762061083408571},
    {0.60296191561591872, -0.27838884778821549, 0.74762061083408571},
    {0.60296191561591872, 0.27838884778821549, -0.74762061083408571},
    {-0.60296191561591872, -0.27838884778821549, 0.74762061083408571},
    {0.60296191561591872, -0.27838884778821549, -0.74762061083408571},
    {-0.60296191561591872, 0.27838884778821549, -0.74762061083408571},
    {-0.60296191561591872, -0.27838884778821549, -0.74762061083408571},
    {0.74762061083408571, 0.27838884778821549, 0.60296191561591872},
    {-0.74762061083408571, 0.27838884778821549, 0.60296191561591872},
    {0.74762061083408571, -0.27838884778821549, 0.60296191561591872},
    {0.74762061083408571, 0.27838884778821549, -0.60296191561591872},
    {-0.74762061083408571, -0.27838884778821549, 0.60296191561591872},
    {0.74762061083408571, -0.27838884778821549, -0.60296191561591872},
    {-0.74762061083408571, 0.27838884778821549, -0.60296191561591872},
    {-0.74762061083408571, -0.27838884778821549, -0.60296191561591872},
    {0.74762061083408571, 0.60296191561591872, 0.27838884778821549},
    {-0.74762061083408571, 0.60296191561591872, 0.27838884778821549},
    {0.74762061083408571, -0.60296191561591872, 0.27838884778821549},
    {0.74762061083408571, 0.60296191561591872, -0.27838884778821549},
    {-0.74762061083408571, -0.60296191561591872, 0.27838884778821549},
    {0.74762061083408571, -0.60296191561591872, -0.27838884778821549},
    {-0.74762061083408571, 0.60296191561591872, -0.27838884778821549},
    {-0.74762061083408571, -0.60296191561591872, -0.27838884778821549},
    {0.27838884778821549, 0.74762061083408571, 0.60296191561591872},
    {-0.27838884778821549, 0.74762061083408571, 0.60296191561591872},
    {0.27838884778821549, -0.74762061083408571, 0.60296191561591872},
    {0.27838884778821549, 0.74762061083408571, -0.60296191561591872},
    {-0.27838884778821549, -0.74762061083408571, 0.60296191561591872},
    {0.27838884778821549, -0.74762061083408571, -0.60296191561591872},
    {-0.27838884778821549, 0.74762061083408571, -0.60296191561591872},
    {-0.27838884778821549, -0.74762061083408571, -0.60296191561591872},
    {0.60296191561591872, 0.74762061083408571, 0.27838884778821549},
    {-0.60296191561591872, 0.74762061083408571, 0.27838884778821549},
    {0.60296191561591872, -0.74762061083408571, 0.27838884778821549},
    {0.60296191561591872, 0.74762061083408571, -0.27838884778821549},
    {-0.60296191561591872, -0.74762061083408571, 0.27838884778821549},
    {0.60296191561591872, -0.74762061083408571, -0.27838884778821549},
    {-0.60296191561591872, 0.74762061083408571, -0.27838884778821549},
    {-0.60296191561591872, -0.74762061083408571, -0.27838884778821549},
    {0.1979578938917407, 0.35896063295890962, 0.91211837840912147},
    {-0.1979578938917407, 0.35896063295890962, 0.91211837840912147},
    {0.1979578938917407, -0.35896063295890962, 0.91211837840912147},
    {0.1979578938917407, 0.35896063295890962, -0.91211837840912147},
    {-0.1979578938917407, -0.35896063295890962, 0.91211837840912147},
    {0.1979578938917407, -0.35896063295890962, -0.91211837840912147},
    {-0.1979578938917407, 0.35896063295890962, -0.91211837840912147},
    {-0.1979578938917407, -0.35896063295890962, -0.91211837840912147},
    {0.35896063295890962, 0.1979578938917407, 0.91211837840912147},
    {-0.35896063295890962, 0.1979578938917407, 0.91211837840912147},
    {0.35896063295890962, -0.1979578938917407, 0.91211837840912147},
    {0.35896063295890962, 0.1979578938917407, -0.91211837840912147},
    {-0.35896063295890962, -0.1979578938917407, 0.91211837840912147},
    {0.35896063295890962, -0.1979578938917407, -0.91211837840912147},
    {-0.35896063295890962, 0.1979578938917407, -0.91211837840912147},
    {-0.35896063295890962, -0.1979578938917407, -0.91211837840912147},
    {0.91211837840912147, 0.1979578938917407, 0.35896063295890962},
    {-0.91211837840912147, 0.1979578938917407, 0.35896063295890962},
    {0.91211837840912147, -0.1979578938917407, 0.35896063295890962},
    {0.91211837840912147, 0.1979578938917407, -0.35896063295890962},
    {-0.91211837840912147, -0.1979578938917407, 0.35896063295890962},
    {0.91211837840912147, -0.1979578938917407, -0.35896063295890962},
    {-0.91211837840912147, 0.1979578938917407, -0.35896063295890962},
    {-0.91211837840912147, -0.1979578938917407, -0.35896063295890962},
    {0.91211837840912147, 0.35896063295890962, 0.1979578938917407},
    {-0.91211837840912147, 0.35896063295890962, 0.1979578938917407},
    {0.91211837840912147, -0.35896063295890962, 0.1979578938917407},
    {0.91211837840912147, 0.35896063295890962, -0.1979578938917407},
    {-0.91211837840912147, -0.35896063295890962, 0.1979578938917407},
    {0.91211837840912147, -0.35896063295890962, -0.1979578938917407},
    {-0.91211837840912147, 0.35896063295890962, -0.1979578938917407},
    {-0.91211837840912147, -0.35896063295890962, -0.1979578938917407},
    {0.1979578938917407, 0.91211837840912147, 0.35896063295890962},
    {-0.1979578938917407, 0.91211837840912147, 0.35896063295890962},
    {0.1979578938917407, -0.91211837840912147, 0.35896063295890962},
    {0.1979578938917407, 0.91211837840912147, -0.35896063295890962},
    {-0.1979578938917407, -0.91211837840912147, 0.35896063295890962},
    {0.1979578938917407, -0.91211837840912147, -0.35896063295890962},
    {-0.1979578938917407, 0.91211837840912147, -0.35896063295890962},
    {-0.1979578938917407, -0.91211837840912147, -0.35896063295890962},
    {0.35896063295890962, 0.91211837840912147, 0.1979578938917407},
    {-0.35896063295890962, 0.91211837840912147, 0.1979578938917407},
    {0.35896063295890962, -0.91211837840912147, 0.1979578938917407},
    {0.35896063295890962, 0.91211837840912147, -0.1979578938917407},
    {-0.35896063295890962, -0.91211837840912147, 0.1979578938917407},
    {0.35896063295890962, -0.91211837840912147, -0.1979578938917407},
    {-0.35896063295890962, 0.91211837840912147, -0.1979578938917407},
    {-0.35896063295890962, -0.91211837840912147, -0.1979578938917407},
    {0.2087307061103274, 0.53486664381354765, 0.81874853628102184},
    {-0.2087307061103274, 0.53486664381354765, 0.81874853628102184},
    {0.2087307061103274, -0.53486664381354765, 0.81874853628102184},
    {0.2087307061103274, 0.53486664381354765, -0.81874853628102184},
    {-0.2087307061103274, -0.53486664381354765, 0.81874853628102184},
    {0.2087307061103274, -0.53486664381354765, -0.81874853628102184},
    {-0.2087307061103274, 0.53486664381354765, -0.81874853628102184},
    {-0.2087307061103274, -0.53486664381354765, -0.81874853628102184},
    {0.53486664381354765, 0.2087307061103274, 0.81874853628102184},
    {-0.53486664381354765, 0.2087307061103274, 0.81874853628102184},
    {0.53486664381354765, -0.2087307061103274, 0.81874853628102184},
    {0.53486664381354765, 0.2087307061103274, -0.81874853628102184},
    {-0.53486664381354765, -0.2087307061103274, 0.81874853628102184},
    {0.53486664381354765, -0.2087307061103274, -0.81874853628102184},
    {-0.53486664381354765, 0.2087307061103274, -0.81874853628102184},
    {-0.53486664381354765, -0.2087307061103274, -0.81874853628102184},
    {0.81874853628102184, 0.2087307061103274, 0.53486664381354765},
    {-0.81874853628102184, 0.2087307061103274, 0.53486664381354765},
    {0.81874853628102184, -0.2087307061103274, 0.53486664381354765},
    {0.81874853628102184, 0.2087307061103274, -0.53486664381354765},
    {-0.81874853628102184, -0.2087307061103274, 0.53486664381354765},
    {0.81874853628102184, -0.2087307061103274, -0.53486664381354765},
    {-0.81874853628102184, 0.2087307061103274, -0.53486664381354765},
    {-0.81874853628102184, -0.2087307061103274, -0.53486664381354765},
    {0.81874853628102184, 0.53486664381354765, 0.2087307061103274},
    {-0.81874853628102184, 0.53486664381354765, 0.2087307061103274},
    {0.81874853628102184, -0.53486664381354765, 0.2087307061103274},
    {0.81874853628102184, 0.53486664381354765, -0.2087307061103274},
    {-0.81874853628102184, -0.53486664381354765, 0.2087307061103274},
    {0.81874853628102184, -0.53486664381354765, -0.2087307061103274},
    {-0.81874853628102184, 0.53486664381354765, -0.2087307061103274},
    {-0.81874853628102184, -0.53486664381354765, -0.2087307061103274},
    {0.2087307061103274, 0.81874853628102184, 0.53486664381354765},
    {-0.2087307061103274, 0.81874853628102184, 0.53486664381354765},
    {0.2087307061103274, -0.81874853628102184, 0.53486664381354765},
    {0.2087307061103274, 0.81874853628102184, -0.53486664381354765},
    {-0.2087307061103274, -0.81874853628102184, 0.53486664381354765},
    {0.2087307061103274, -0.81874853628102184, -0.53486664381354765},
    {-0.2087307061103274, 0.81874853628102184, -0.53486664381354765},
    {-0.2087307061103274, -0.81874853628102184, -0.53486664381354765},
    {0.53486664381354765, 0.81874853628102184, 0.2087307061103274},
    {-0.53486664381354765, 0.81874853628102184, 0.2087307061103274},
    {0.53486664381354765, -0.81874853628102184, 0.2087307061103274},
    {0.53486664381354765, 0.81874853628102184, -0.2087307061103274},
    {-0.53486664381354765, -0.81874853628102184, 0.2087307061103274},
    {0.53486664381354765, -0.81874853628102184, -0.2087307061103274},
    {-0.53486664381354765, 0.81874853628102184, -0.2087307061103274},
    {-0.53486664381354765, -0.81874853628102184, -0.2087307061103274},
    {0.40551221378728358, 0.56749975460743729, 0.71659184546702381},
    {-0.40551221378728358, 0.56749975460743729, 0.71659184546702381},
    {0.40551221378728358, -0.56749975460743729, 0.71659184546702381},
    {0.40551221378728358, 0.56749975460743729, -0.71659184546702381},
    {-0.40551221378728358, -0.56749975460743729, 0.71659184546702381},
    {0.40551221378728358, -0.56749975460743729, -0.71659184546702381},
    {-0.40551221378728358, 0.56749975460743729, -0.71659184546702381},
    {-0.40551221378728358, -0.56749975460743729, -0.71659184546702381},
    {0.56749975460743729, 0.40551221378728358, 0.71659184546702381},
    {-0.56749975460743729, 0.40551221378728358, 0.71659184546702381},
    {0.56749975460743729, -0.40551221378728358, 0.71659184546702381},
    {0.56749975460743729, 0.40551221378728358, -0.71659184546702381},
    {-0.56749975460743729, -0.40551221378728358, 0.71659184546702381},
    {0.56749975460743729, -0.40551221378728358, -0.71659184546702381},
    {-0.56749975460743729, 0.40551221378728358, -0.71659184546702381},
    {-0.56749975460743729, -0.40551221378728358, -0.71659184546702381},
    {0.71659184546702381, 0.40551221378728358, 0.56749975460743729},
    {-0.71659184546702381, 0.40551221378728358, 0.56749975460743729},
    {0.71659184546702381, -0.40551221378728358, 0.56749975460743729},
    {0.71659184546702381, 0.40551221378728358, -0.56749975460743729},
    {-0.71659184546702381, -0.40551221378728358, 0.56749975460743729},
    {0.71659184546702381, -0.40551221378728358, -0.56749975460743729},
    {-0.71659184546702381, 0.40551221378728358, -0.56749975460743729},
    {-0.71659184546702381, -0.40551221378728358, -0.56749975460743729},
    {0.71659184546702381, 0.56749975460743729, 0.40551221378728358},
    {-0.71659184546702381, 0.56749975460743729, 0.40551221378728358},
    {0.71659184546702381, -0.56749975460743729, 0.40551221378728358},
    {0.71659184546702381, 0.56749975460743729, -0.40551221378728358},
    {-0.71659184546702381, -0.56749975460743729, 0.40551221378728358},
    {0.71659184546702381, -0.56749975460743729, -0.40551221378728358},
    {-0.71659184546702381, 0.56749975460743729, -0.40551221378728358},
    {-0.71659184546702381, -0.56749975460743729, -0.40551221378728358},
    {0.40551221378728358, 0.71659184546702381, 0.56749975460743729},
    {-0.40551221378728358, 0.71659184546702381, 0.56749975460743729},
    {0.40551221378728358, -0.71659184546702381, 0.56749975460743729},
    {0.40551221378728358, 0.71659184546702381, -0.56749975460743729},
    {-0.40551221378728358, -0.71659184546702381, 0.56749975460743729},
    {0.40551221378728358, -0.71659184546702381, -0.56749975460743729},
    {-0.40551221378728358, 0.71659184546702381, -0.56749975460743729},
    {-0.40551221378728358, -0.71659184546702381, -0.56749975460743729},
    {0.56749975460743729, 0.71659184546702381, 0.40551221378728358},
    {-0.56749975460743729, 0.71659184546702381, 0.40551221378728358},
    {0.56749975460743729, -0.71659184546702381, 0.40551221378728358},
    {0.56749975460743729, 0.71659184546702381, -0.40551221378728358},
    {-0.56749975460743729, -0.71659184546702381, 0.40551221378728358},
    {0.56749975460743729, -0.71659184546702381, -0.40551221378728358},
    {-0.56749975460743729, 0.71659184546702381, -0.40551221378728358},
    {-0.56749975460743729, -0.71659184546702381, -0.40551221378728358},
}};

}  // namespace tramp::detail
