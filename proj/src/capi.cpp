// placeholder
extern "C" int lam_placeholder(void){return 0;}
