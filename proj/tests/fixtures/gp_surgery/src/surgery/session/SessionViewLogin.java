package surgery.session;

public class SessionViewLogin {
    private SessionController controller;

    public SessionViewLogin() {
        this.controller = new SessionController();
    }

    public void submit(String name) {
        controller.logout();
    }
}
