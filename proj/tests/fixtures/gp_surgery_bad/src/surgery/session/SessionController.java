package surgery.session;

import surgery.view.admin.AdminViewAppointments;
import surgery.view.nhsdoctor.NHSDoctorView;
import surgery.view.privatedoctor.PrivateDoctorView;

public class SessionController {
    private SessionModel model;

    public SessionController() {
        this.model = new SessionModel();
    }

    public void activateNhsDoctor() {
        NHSDoctorView view = new NHSDoctorView();
        view.render();
    }

    public void activatePrivateDoctor() {
        PrivateDoctorView view = new PrivateDoctorView();
        view.render();
    }

    public void activateAdmin() {
        AdminViewAppointments view = new AdminViewAppointments();
        view.open();
    }

    public void logout() {
        model.logout();
    }
}
